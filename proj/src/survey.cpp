#include "jpcert/survey.hpp"

#include <atomic>
#include <cctype>
#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "jpcert/errors.hpp"

namespace jpcert {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

// quote a CSV field when it contains separators
std::string csv_field(const std::string& s) {
    if (s.find(',') == std::string::npos && s.find('"') == std::string::npos) return s;
    std::string quoted = "\"";
    for (char ch : s) {
        if (ch == '"') quoted += "\"\"";
        else quoted += ch;
    }
    quoted += '"';
    return quoted;
}

struct Row {
    std::string text;
};

}  // namespace

HalfIntegralIndexMatrix parse_two_m(const std::string& text) {
    std::vector<std::vector<Int>> rows;
    for (const std::string& row : split(text, ';')) {
        std::vector<Int> entries;
        for (const std::string& cell : split(row, ','))
            entries.emplace_back(cell);
        rows.push_back(std::move(entries));
    }
    const long g = static_cast<long>(rows.size());
    std::vector<Int> flat;
    for (const auto& row : rows) {
        if (static_cast<long>(row.size()) != g)
            throw DomainError("two_m: matrix must be square (';' rows, ',' entries)");
        for (const Int& v : row) flat.push_back(v);
    }
    return HalfIntegralIndexMatrix::from_two_m(g, std::move(flat));
}

std::vector<Int> parse_r_vector(const std::string& text) {
    std::vector<Int> out;
    for (const std::string& cell : split(text, ',')) out.emplace_back(cell);
    return out;
}

SurveyJob SurveyJob::from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    SurveyJob job;
    for (const auto& v : j.at("k")) job.k_values.push_back(v.get<long>());
    for (const auto& v : j.at("two_m")) job.two_m_values.push_back(v.get<std::string>());
    for (const auto& v : j.at("n"))
        job.n_values.emplace_back(v.is_string() ? v.get<std::string>() : v.dump());
    for (const auto& v : j.at("r")) job.r_values.push_back(v.get<std::string>());
    if (j.contains("c_max")) job.c_max = j["c_max"].get<long>();
    if (j.contains("prec_bits")) job.prec_bits = j["prec_bits"].get<long>();
    if (j.contains("jobs")) job.jobs = j["jobs"].get<int>();
    if (j.contains("timings")) job.timings = j["timings"].get<bool>();
    return job;
}

SurveyJob SurveyJob::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("survey: cannot open config " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return from_json_text(buf.str());
}

namespace {

std::string make_row(const SurveyJob& job, long k, const std::string& two_m_text,
                     const Int& n, const std::string& r_text) {
    std::ostringstream os;
    const auto started = std::chrono::steady_clock::now();
    std::string g_str, d_str, status, s_value, s_error, tail, cmax_str, prec_str;
    try {
        HalfIntegralIndexMatrix m = parse_two_m(two_m_text);
        std::vector<Int> r = parse_r_vector(r_text);
        g_str = std::to_string(m.g());
        JacobiIndex idx{n, r};
        Int D = discriminant(idx, m);
        d_str = D.str();
        std::optional<TruncationPlan> plan;
        if (job.c_max || job.prec_bits) {
            TruncationPlan p = TruncationPlan::defaults_for(D > 0 ? D : 1, m.det_two_m());
            if (job.c_max) p.c_max = *job.c_max;
            if (job.prec_bits) p.prec = static_cast<Prec>(*job.prec_bits);
            plan = p;
        }
        Certificate cert = certify_nonvanishing(k, m, idx, plan);
        switch (cert.status) {
            case CertStatus::CertifiedNonzero: status = "CertifiedNonzero"; break;
            case CertStatus::VanishesExactly: status = "VanishesExactly"; break;
            case CertStatus::Inconclusive: status = "Inconclusive"; break;
        }
        s_value = cert.s_abs.mid_string(20);
        s_error = cert.s_abs.rad_string(3);
        tail = cert.tail.mid_string(3);
        cmax_str = std::to_string(cert.plan_used.c_max);
        prec_str = std::to_string(static_cast<long>(cert.plan_used.prec));
    } catch (const Error&) {
        status = "skipped";
    }
    long elapsed = 0;
    if (job.timings)
        elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - started)
                      .count();
    os << k << ',' << g_str << ',' << csv_field(two_m_text) << ',' << n.str() << ','
       << csv_field(r_text) << ',' << d_str << ',' << status << ',' << s_value << ','
       << s_error << ',' << tail << ',' << cmax_str << ',' << prec_str << ',' << elapsed;
    return os.str();
}

}  // namespace

void run_survey(const SurveyJob& job, std::ostream& out) {
    struct Point {
        long k;
        const std::string* two_m;
        const Int* n;
        const std::string* r;
    };
    std::vector<Point> grid;
    for (long k : job.k_values)
        for (const auto& tm : job.two_m_values)
            for (const auto& n : job.n_values)
                for (const auto& r : job.r_values) grid.push_back({k, &tm, &n, &r});

    std::vector<std::string> rows(grid.size());
    const int workers = std::max(1, job.jobs);
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= grid.size()) break;
            const Point& p = grid[i];
            rows[i] = make_row(job, p.k, *p.two_m, *p.n, *p.r);
        }
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    out << "k,g,two_m,n,r,D,status,s_value,s_error,tail_bound,c_max,precision_bits,elapsed_ms\n";
    for (const std::string& row : rows) out << row << '\n';
}

std::string survey_csv(const SurveyJob& job) {
    std::ostringstream os;
    run_survey(job, os);
    return os.str();
}

}  // namespace jpcert
