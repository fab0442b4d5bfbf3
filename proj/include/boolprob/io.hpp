#ifndef BOOLPROB_IO_HPP
#define BOOLPROB_IO_HPP

#include <string>
#include <vector>

#include "boolprob/certify.hpp"
#include "boolprob/experiments.hpp"
#include "boolprob/functionals.hpp"
#include "boolprob/measure.hpp"

namespace boolprob {

// Measure schema: object with optional "name" and required "atoms", an
// array of {"x": number, "w": number}. Weights off from one by at most 1e-9
// are renormalized silently; beyond that the document is rejected.
AtomicMeasure parse_measure(const std::string& text, double merge_tol = kDefaultMergeTol);
AtomicMeasure load_measure_file(const std::string& path, double merge_tol = kDefaultMergeTol);

// Emission is byte-stable: fixed field order, atoms sorted ascending,
// numbers at 17 significant digits in JSON and 12 in CSV, infinities as
// "inf"/"-inf".
std::string measure_to_json(const AtomicMeasure& mu);
std::string report_to_json(const FunctionalReport& rep);

std::string slacks_to_json(const std::vector<InequalitySlack>& slacks);
std::string slacks_to_csv(const std::vector<InequalitySlack>& slacks);

std::string clt_rows_to_json(const std::vector<CltRow>& rows);
std::string clt_rows_to_csv(const std::vector<CltRow>& rows);

std::string rate_rows_to_json(const std::vector<RateRow>& rows);
std::string rate_rows_to_csv(const std::vector<RateRow>& rows);

std::string decay_rows_to_json(const std::vector<DecayRow>& rows);
std::string decay_rows_to_csv(const std::vector<DecayRow>& rows);

// Formatting helpers shared by the writers above.
std::string format_double(double v, int significant_digits);
std::string format_extended(const ExtendedReal& v, int significant_digits, bool json);

} // namespace boolprob

#endif
