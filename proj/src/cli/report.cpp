#include "eo/cli/report.hpp"

#include <chrono>
#include <sstream>

namespace eo::cli {

bool Report::pass() const {
    for (const auto& r : records)
        if (r.status == "fail") return false;
    return true;
}

nlohmann::json Report::to_json() const {
    nlohmann::json recs = nlohmann::json::array();
    for (const auto& r : records)
        recs.push_back({{"id", r.id}, {"reference", r.reference}, {"status", r.status}, {"residual", r.residual}, {"seconds", r.seconds}});
    return {{"suite", suite}, {"version", kVersion}, {"config", config}, {"records", recs}, {"status", pass() ? "pass" : "fail"}};
}

namespace {

std::string csv_field(std::string s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

std::string residual_text(const nlohmann::json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

}  // namespace

std::string Report::to_csv() const {
    std::ostringstream os;
    os << "id,reference,status,residual,seconds\n";
    for (const auto& r : records)
        os << csv_field(r.id) << ',' << csv_field(r.reference) << ',' << r.status << ',' << csv_field(residual_text(r.residual)) << ',' << r.seconds << '\n';
    return os.str();
}

std::string Report::to_pretty() const {
    std::ostringstream os;
    for (const auto& r : records) os << (r.status == "pass" ? "PASS " : r.status == "fail" ? "FAIL " : "SKIP ") << r.id << "  residual=" << residual_text(r.residual) << '\n';
    os << suite << ": " << (pass() ? "pass" : "fail") << '\n';
    return os.str();
}

Report run_checks(const std::string& suite, const std::vector<Check>& checks, parallel::Exec exec) {
    Report rep{suite, {}, std::vector<CheckRecord>(checks.size())};
    const long n = static_cast<long>(checks.size());
#pragma omp parallel for schedule(dynamic) if (exec == parallel::Exec::parallel)
    for (long i = 0; i < n; ++i) {
        const Check& c = checks[static_cast<std::size_t>(i)];
        CheckRecord& r = rep.records[static_cast<std::size_t>(i)];
        r.id = c.id;
        r.reference = c.reference;
        auto start = std::chrono::steady_clock::now();
        try {
            Outcome o = c.run();
            r.status = o.pass ? "pass" : "fail";
            r.residual = o.residual;
        } catch (const std::exception& e) {
            r.status = "fail";
            r.residual = std::string("error: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    return rep;
}

}  // namespace eo::cli
