#pragma once

#include <filesystem>
#include <ostream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "ffsieve/search.hpp"
#include "ffsieve/sieve.hpp"
#include "ffsieve/transference.hpp"

namespace ffsieve::cli {

using json = nlohmann::json;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Json, Csv };
Format parse_format(const std::string& s);

/// Sorted keys, 2-space indent, floats with 12 significant digits, non-finite floats as
/// null, LF line endings, trailing newline.
std::string stable_dump(const json& j);
/// Single-line variant used for CSV cells.
std::string compact_dump(const json& j);
/// Header row of the sorted top-level keys, then one row of values. Nested values are
/// written as compact JSON inside quotes.
std::string to_csv(const json& j);

/// emit_report: writes the rendered report to path, or to `console` when path is empty.
/// Throws IoError with the OS message on failure.
void emit_report(const json& report, Format format, const std::filesystem::path& path, std::ostream& console);
std::string render(const json& report, Format format);

json field_json(const Field& F);
json poly_json(const Field& F, const Poly& f);
json poly_list_json(const Field& F, const std::vector<Poly>& v);
json params_json(const SieveParams& P);
json bigint_json(const BigInt& v);
json rational_json(const Rational& v);

json to_json(const SumReport& rep, const SieveParams& P);
json to_json(const DensityReport& rep, const SieveParams& P);
json to_json(const EstimateReport& rep);
json to_json(const TransferenceCheck& chk);
json to_json(const Field& F, const SearchReport& rep);
json to_json(const Functionals& fn);

}  // namespace ffsieve::cli
