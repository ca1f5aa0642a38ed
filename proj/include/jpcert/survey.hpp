// Grid surveys of non-vanishing certificates with deterministic CSV output:
// rows are emitted in lexicographic grid order regardless of the worker
// count, so reruns are byte-identical.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "jpcert/certify.hpp"

namespace jpcert {

struct SurveyJob {
    std::vector<long> k_values;
    std::vector<std::string> two_m_values;  // "2" or "2,1;1,2" (row-major, ';' rows)
    std::vector<Int> n_values;
    std::vector<std::string> r_values;      // ','-separated integers
    std::optional<long> c_max;
    std::optional<long> prec_bits;
    int jobs = 1;
    bool timings = false;  // keep elapsed_ms at 0 unless explicitly requested

    static SurveyJob from_json_text(const std::string& text);
    static SurveyJob from_json_file(const std::string& path);
};

HalfIntegralIndexMatrix parse_two_m(const std::string& text);
std::vector<Int> parse_r_vector(const std::string& text);

// One CSV row per grid point in (k, two_m, n, r) order; precondition
// failures become status=skipped rows.
void run_survey(const SurveyJob& job, std::ostream& out);
std::string survey_csv(const SurveyJob& job);

}  // namespace jpcert
