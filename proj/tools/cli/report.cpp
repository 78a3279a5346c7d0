#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>

#include "ffsieve/poly_io.hpp"

namespace ffsieve::cli {

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw std::invalid_argument("unknown format '" + s + "' (json|csv)");
}

namespace {

std::string number(double v) {
  if (!std::isfinite(v)) return "null";
  if (v == 0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write(const json& j, std::string& out, int indent, int depth) {
  const bool pretty = indent >= 0;
  auto newline = [&](int d) {
    if (!pretty) return;
    out += '\n';
    out.append(static_cast<std::size_t>(d * indent), ' ');
  };
  switch (j.type()) {
    case json::value_t::null: out += "null"; break;
    case json::value_t::boolean: out += j.get<bool>() ? "true" : "false"; break;
    case json::value_t::number_integer: out += std::to_string(j.get<long long>()); break;
    case json::value_t::number_unsigned: out += std::to_string(j.get<unsigned long long>()); break;
    case json::value_t::number_float: out += number(j.get<double>()); break;
    case json::value_t::string: out += j.dump(); break;
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        break;
      }
      out += '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        write(v, out, indent, depth + 1);
      }
      newline(depth);
      out += ']';
      break;
    }
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        break;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += json(it.key()).dump();
        out += pretty ? ": " : ":";
        write(it.value(), out, indent, depth + 1);
      }
      newline(depth);
      out += '}';
      break;
    }
    default: out += "null"; break;
  }
}

std::string csv_cell(const json& v) {
  const std::string s = v.is_string() ? v.get<std::string>() : compact_dump(v);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

}  // namespace

std::string stable_dump(const json& j) {
  std::string out;
  write(j, out, 2, 0);
  out += '\n';
  return out;
}

std::string compact_dump(const json& j) {
  std::string out;
  write(j, out, -1, 0);
  return out;
}

std::string to_csv(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("to_csv: report must be a JSON object");
  std::string header, row;
  bool first = true;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!first) {
      header += ',';
      row += ',';
    }
    first = false;
    header += it.key();
    row += csv_cell(it.value());
  }
  return header + "\n" + row + "\n";
}

std::string render(const json& report, Format format) {
  return format == Format::Json ? stable_dump(report) : to_csv(report);
}

void emit_report(const json& report, Format format, const std::filesystem::path& path, std::ostream& console) {
  const std::string text = render(report, format);
  if (path.empty()) {
    console << text << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + ": " + std::strerror(errno));
  out << text;
  out.close();
  if (!out) throw IoError("cannot write " + path.string() + ": " + std::strerror(errno));
}

json field_json(const Field& F) { return {{"p", F.characteristic()}, {"e", F.degree()}, {"q", F.order()}}; }

json poly_json(const Field& F, const Poly& f) { return to_string(F, f); }

json poly_list_json(const Field& F, const std::vector<Poly>& v) {
  json a = json::array();
  for (const auto& f : v) a.push_back(to_string(F, f));
  return a;
}

json bigint_json(const BigInt& v) {
  if (v >= 0 && v <= BigInt(std::numeric_limits<std::uint64_t>::max())) return static_cast<std::uint64_t>(v);
  return v.str();
}

json rational_json(const Rational& v) {
  const BigInt num = boost::multiprecision::numerator(v), den = boost::multiprecision::denominator(v);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

json params_json(const SieveParams& P) {
  json j = field_json(P.F);
  j["n"] = P.n;
  j["k"] = P.k;
  j["m"] = P.m;
  j["w"] = P.w;
  j["eta"] = P.eta;
  j["eps"] = P.eps;
  j["r"] = P.r;
  j["a"] = P.weight.exponent();
  j["H"] = poly_list_json(P.F, P.H.elements());
  j["W"] = poly_json(P.F, P.W);
  j["b"] = poly_json(P.F, P.b);
  j["seed"] = P.seed;
  return j;
}

json to_json(const SumReport& rep, const SieveParams& P) {
  json j = params_json(P);
  j["label"] = rep.label;
  j["route"] = rep.route;
  j["exact"] = rep.exact;
  j["predicted"] = rep.predicted;
  j["rel_error"] = rep.rel_error;
  j["visited"] = rep.visited;
  if (rep.exact_rational) j["exact_rational"] = rational_json(*rep.exact_rational);
  for (const auto& [k, v] : rep.extras) j[k] = v;
  for (const auto& [k, v] : rep.notes) j[k] = v;
  return j;
}

json to_json(const DensityReport& rep, const SieveParams& P) {
  json j = params_json(P);
  j["label"] = "density";
  j["count_A"] = rep.count_A;
  j["candidates"] = rep.candidates;
  j["in_P_eps"] = rep.in_P_eps;
  j["maincount"] = rep.maincount;
  j["measured_a"] = rep.measured_a;
  if (rep.measured_a_exact) j["measured_a_exact"] = rational_json(*rep.measured_a_exact);
  j["members"] = poly_list_json(P.F, rep.members);
  return j;
}

json to_json(const EstimateReport& rep) {
  return {{"ell", rep.ell},         {"pattern_id", rep.pattern_id}, {"mode", rep.mode},
          {"N", rep.samples},       {"seed", rep.seed},             {"estimate", rep.estimate},
          {"stderr", rep.stderr_},  {"degenerate", rep.degenerate}, {"variables", rep.variables}};
}

json to_json(const TransferenceCheck& c) {
  return {{"elements", c.elements},
          {"in_A", c.in_A},
          {"phi_nonnegative_below_nu", c.phi_nonnegative_below_nu},
          {"phi_equals_nu_on_A", c.phi_equals_nu_on_A},
          {"phi_zero_off_A", c.phi_zero_off_A},
          {"sup_phi", c.sup_phi},
          {"sup_bound", c.sup_bound},
          {"mean_phi", rational_json(c.mean_phi)},
          {"delta", rational_json(c.delta)},
          {"mean_at_least_delta", c.mean_at_least_delta}};
}

json to_json(const Field& F, const SearchReport& rep) {
  json found = json::array();
  for (const auto& fc : rep.found) {
    json t = json::array();
    for (const auto& hit : fc.translates) {
      json v = json::array();
      for (bool b : hit.verdicts) v.push_back(b);
      t.push_back({{"j", hit.j}, {"h", poly_json(F, hit.shift)}, {"elements", poly_list_json(F, hit.elements)},
                   {"irreducible", v}});
    }
    found.push_back({{"f", poly_json(F, fc.f)},
                     {"g", poly_json(F, fc.g)},
                     {"ell", fc.ell},
                     {"elements", poly_list_json(F, fc.elements)},
                     {"translate_set", t}});
  }
  json q = field_json(F);
  q["kind"] = rep.kind;
  q["n"] = rep.n;
  q["ell"] = rep.ell;
  q["m"] = rep.m;
  q["H"] = poly_list_json(F, rep.H);
  q["mode"] = rep.mode;
  return {{"query", q},
          {"found", found},
          {"count", rep.found.size()},
          {"space_size", rep.space_size},
          {"visited", rep.visited},
          {"partial", rep.partial},
          {"seed", rep.seed}};
}

json to_json(const Functionals& fn) {
  return {{"alpha", fn.alpha},
          {"beta", fn.beta},
          {"gamma", fn.gamma},
          {"crucial_ratio", fn.crucial_ratio},
          {"achieved_error", fn.achieved_error},
          {"method", fn.method}};
}

}  // namespace ffsieve::cli
