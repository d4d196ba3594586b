#include "maxbetti/cli.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "maxbetti/betti.hpp"
#include "maxbetti/monomials.hpp"
#include "maxbetti/oracle.hpp"

namespace maxbetti {

namespace {

using nlohmann::json;

std::string strip(const std::string& text) {
  std::string out;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '{' && ch != '}' && ch != '(' &&
        ch != ')')
      out.push_back(ch);
  return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

Int int_from_string(const std::string& text) {
  try {
    return Int(text);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not an integer: \"" + text + "\"");
  }
}

Rat rat_from_string(const std::string& text) {
  try {
    Rat r(text);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational: \"" + text + "\"");
  }
}

json json_int(const Int& v) {
  if (fits_int64(v)) return json(to_int64(v));
  return json(v.get_str());
}

Int int_from_json(const json& v) {
  if (v.is_number_integer()) return Int(static_cast<long>(v.get<int64_t>()));
  if (v.is_number_unsigned()) return Int(v.get<uint64_t>());
  if (v.is_string()) return int_from_string(v.get<std::string>());
  throw std::invalid_argument("expected an integer, got " + v.dump());
}

json int_vector_json(const std::vector<Int>& vals) {
  json arr = json::array();
  for (const auto& v : vals) arr.push_back(json_int(v));
  return arr;
}

std::string int_vector_text(const std::vector<Int>& vals) {
  std::string s;
  for (size_t i = 0; i < vals.size(); ++i) {
    if (i) s += ' ';
    s += vals[i].get_str();
  }
  return s;
}

const char* algorithm_name(AlgorithmChoice a) {
  switch (a) {
    case AlgorithmChoice::Automatic: return "automatic";
    case AlgorithmChoice::Simplified: return "simplified";
    default: return "complete";
  }
}

const char* results_name(ResultsMode m) {
  switch (m) {
    case ResultsMode::None: return "none";
    case ResultsMode::One: return "one";
    case ResultsMode::AllMaxBettiSum: return "all-max-betti-sum";
    default: return "all";
  }
}

int64_t ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                               t0)
      .count();
}

}  // namespace

BoundMap parse_bound_list(const std::string& text) {
  BoundMap map;
  std::string s = strip(text);
  if (s.empty()) return map;
  bool named = s.find('=') != std::string::npos || s.find(':') != std::string::npos;
  std::vector<std::string> parts = split(s, ',');
  for (size_t i = 0; i < parts.size(); ++i) {
    const std::string& part = parts[i];
    if (part.empty()) {
      if (named) throw std::invalid_argument("empty entry in degree=value list");
      continue;
    }
    if (named) {
      size_t pos = part.find_first_of("=:");
      if (pos == std::string::npos)
        throw std::invalid_argument("expected degree=value, got \"" + part + "\"");
      int64_t degree = std::stoll(part.substr(0, pos));
      if (degree < 0) throw std::invalid_argument("negative degree in bound list");
      map[degree] = int_from_string(part.substr(pos + 1));
    } else {
      map[static_cast<int64_t>(i)] = int_from_string(part);
    }
  }
  return map;
}

std::vector<Int> parse_int_list(const std::string& text) {
  std::vector<Int> out;
  for (const std::string& part : split(strip(text), ','))
    out.push_back(int_from_string(part));
  return out;
}

BinomialPolynomial parse_polynomial(const std::string& text) {
  std::vector<Rat> coeffs;
  for (const std::string& part : split(strip(text), ','))
    coeffs.push_back(rat_from_string(part));
  BinomialPolynomial p = BinomialPolynomial::from_coefficients(coeffs);
  if (!p.is_integer_valued())
    throw std::invalid_argument("polynomial is not integer-valued: " + text);
  return p;
}

AlgorithmChoice parse_algorithm(const std::string& text) {
  if (text == "automatic") return AlgorithmChoice::Automatic;
  if (text == "simplified") return AlgorithmChoice::Simplified;
  if (text == "complete") return AlgorithmChoice::Complete;
  throw std::invalid_argument("unknown algorithm \"" + text +
                              "\" (automatic|simplified|complete)");
}

ResultsMode parse_results(const std::string& text) {
  if (text == "none") return ResultsMode::None;
  if (text == "one") return ResultsMode::One;
  if (text == "all-max-betti-sum") return ResultsMode::AllMaxBettiSum;
  if (text == "all") return ResultsMode::All;
  throw std::invalid_argument("unknown results mode \"" + text +
                              "\" (none|one|all-max-betti-sum|all)");
}

namespace {

BoundMap bounds_from_json(const json& v) {
  BoundMap map;
  if (v.is_null()) return map;
  if (v.is_object()) {
    for (const auto& [key, val] : v.items()) map[std::stoll(key)] = int_from_json(val);
    return map;
  }
  if (v.is_array()) {
    for (size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_null()) map[static_cast<int64_t>(i)] = int_from_json(v[i]);
    return map;
  }
  throw std::invalid_argument("bound list must be an object or an array: " + v.dump());
}

}  // namespace

SolveRequest request_from_json(const json& doc) {
  SolveRequest req;
  req.variables = doc.at("variables").get<int64_t>();
  if (doc.contains("hilbert_polynomial") && !doc["hilbert_polynomial"].is_null()) {
    const json& p = doc["hilbert_polynomial"];
    if (p.is_number_integer() || p.is_number_unsigned()) {
      req.hilbert_polynomial = BinomialPolynomial::constant(int_from_json(p));
    } else if (p.is_string()) {
      req.hilbert_polynomial = parse_polynomial(p.get<std::string>());
    } else if (p.is_array()) {
      std::vector<Rat> coeffs;
      for (const json& c : p) {
        if (c.is_string())
          coeffs.push_back(rat_from_string(c.get<std::string>()));
        else
          coeffs.push_back(Rat(int_from_json(c)));
      }
      BinomialPolynomial poly = BinomialPolynomial::from_coefficients(coeffs);
      if (!poly.is_integer_valued())
        throw std::invalid_argument("polynomial is not integer-valued: " + p.dump());
      req.hilbert_polynomial = poly;
    } else {
      throw std::invalid_argument("hilbert_polynomial must be a number, string, or array");
    }
  }
  if (doc.contains("hf_lower")) req.hf_lower = bounds_from_json(doc["hf_lower"]);
  if (doc.contains("hf_upper")) req.hf_upper = bounds_from_json(doc["hf_upper"]);
  if (doc.contains("diff_lower")) req.diff_lower = bounds_from_json(doc["diff_lower"]);
  if (doc.contains("diff_upper")) req.diff_upper = bounds_from_json(doc["diff_upper"]);
  if (doc.contains("algorithm")) req.algorithm = parse_algorithm(doc["algorithm"].get<std::string>());
  if (doc.contains("results")) req.results = parse_results(doc["results"].get<std::string>());
  if (doc.contains("verify")) req.verify = doc["verify"].get<bool>();
  return req;
}

namespace {

json response_json(const ConstraintSpec& spec, AlgorithmChoice algo, ResultsMode mode,
                   const MaxBettiResult& result, bool verified, int64_t timing_ms) {
  json resp;
  resp["variables"] = spec.N;
  resp["horizon"] = spec.D;
  resp["spec"] = {{"G", int_vector_json(spec.G)},
                  {"F", int_vector_json(spec.F)},
                  {"g", int_vector_json(spec.g)},
                  {"f", int_vector_json(spec.f)}};
  resp["algorithm"] = algorithm_name(algo);
  resp["results"] = results_name(mode);
  resp["betti_upper_bound"] = int_vector_json(result.betti_upper_bound);
  resp["maximum_betti_sum"] = json_int(result.maximum_betti_sum);
  resp["is_realizable"] = result.is_realizable;
  if (mode != ResultsMode::None) {
    json hfs = json::array();
    for (const auto& h : result.hilbert_functions) hfs.push_back(int_vector_json(h));
    resp["hilbert_functions"] = hfs;
  }
  if (mode == ResultsMode::All) {
    json mbn = json::array();
    for (const auto& v : result.maximal_betti_numbers) mbn.push_back(int_vector_json(v));
    resp["maximal_betti_numbers"] = mbn;
  }
  if (verified) resp["verified"] = true;
  resp["timing_ms"] = timing_ms;
  return resp;
}

void response_text(std::ostream& out, const ConstraintSpec& spec, AlgorithmChoice algo,
                   ResultsMode mode, const MaxBettiResult& result, bool verified,
                   int64_t timing_ms) {
  out << "variables:         " << spec.N << "\n";
  out << "horizon:           " << spec.D << "\n";
  out << "algorithm:         " << algorithm_name(algo) << "\n";
  out << "betti upper bound: " << int_vector_text(result.betti_upper_bound) << "\n";
  out << "maximum betti sum: " << result.maximum_betti_sum.get_str() << "\n";
  out << "realizable:        " << (result.is_realizable ? "yes" : "no") << "\n";
  if (mode != ResultsMode::None) {
    out << "hilbert functions (" << result.hilbert_functions.size() << "):\n";
    for (const auto& h : result.hilbert_functions) out << "  " << int_vector_text(h) << "\n";
  }
  if (mode == ResultsMode::All) {
    out << "maximal betti numbers:\n";
    for (const auto& v : result.maximal_betti_numbers)
      out << "  " << int_vector_text(v) << "\n";
  }
  if (verified) out << "verified against brute force: ok\n";
  out << "time: " << timing_ms << " ms\n";
}

bool same_result(const MaxBettiResult& a, const MaxBettiResult& b) {
  return a.betti_upper_bound == b.betti_upper_bound &&
         a.maximum_betti_sum == b.maximum_betti_sum && a.is_realizable == b.is_realizable &&
         a.hilbert_functions == b.hilbert_functions &&
         a.maximal_betti_numbers == b.maximal_betti_numbers;
}

}  // namespace

int solve_command(const SolveRequest& request, bool json_output, std::ostream& out,
                  std::ostream& err) {
  auto t0 = std::chrono::steady_clock::now();
  ConstraintSpec spec;
  try {
    spec = build_spec(request.variables, request.hf_lower, request.hf_upper, request.diff_lower,
                      request.diff_upper, request.hilbert_polynomial);
  } catch (const SpecError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadSpec;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadSpec;
  }
  AlgorithmChoice algo = choose_algorithm(spec, request.algorithm);
  MaxBettiResult result;
  try {
    RawDPResult raw = algo == AlgorithmChoice::Simplified
                          ? run_simplified(spec, request.results)
                          : run_complete(spec, request.results);
    result = finalize(raw, spec, request.results);
  } catch (const EmptyFamilyError& e) {
    err << "error: " << e.what() << "\n";
    return kExitEmpty;
  } catch (const InstanceTooLargeError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadSpec;
  }
  if (request.verify) {
    FamilyKind kind = algo == AlgorithmChoice::Simplified ? FamilyKind::WithoutMacaulayCondition
                                                          : FamilyKind::WithMacaulayCondition;
    MaxBettiResult check;
    try {
      check = brute_force_result(spec, kind, request.results);
    } catch (const InstanceTooLargeError& e) {
      err << "error: cannot verify, " << e.what() << "\n";
      return kExitBadSpec;
    } catch (const EmptyFamilyError&) {
      err << "verify mismatch: solver produced a result but enumeration found no tuple\n";
      return kExitMismatch;
    }
    if (!same_result(result, check)) {
      err << "verify mismatch:\n";
      err << "  solver bound " << int_vector_text(result.betti_upper_bound) << " sum "
          << result.maximum_betti_sum.get_str() << "\n";
      err << "  oracle bound " << int_vector_text(check.betti_upper_bound) << " sum "
          << check.maximum_betti_sum.get_str() << "\n";
      return kExitMismatch;
    }
  }
  int64_t elapsed = ms_since(t0);
  if (json_output)
    out << response_json(spec, algo, request.results, result, request.verify, elapsed).dump(2)
        << "\n";
  else
    response_text(out, spec, algo, request.results, result, request.verify, elapsed);
  return kExitOk;
}

int ideal_command(int64_t variables, const std::vector<Int>& h, bool json_output,
                  std::ostream& out, std::ostream& err) {
  AlmostLexIdeal alx;
  try {
    alx = almost_lex_ideal(variables, h);
  } catch (const NotOSequenceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadSpec;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadSpec;
  }
  if (json_output) {
    json doc;
    doc["variables"] = variables;
    json gens = json::array();
    for (const auto& g : alx.ideal.gens) {
      json one;
      one["exponents"] = g.exp;
      one["monomial"] = display(g);
      gens.push_back(one);
    }
    doc["generators"] = gens;
    json entries = json::array();
    for (const auto& [key, val] : alx.betti.entries)
      entries.push_back({{"q", key.first}, {"j", key.second}, {"value", json_int(val)}});
    doc["betti_table"] = {{"convention", "quotient"},
                          {"entries", entries},
                          {"totals", int_vector_json(alx.betti.totals())}};
    out << doc.dump(2) << "\n";
  } else {
    out << "generators (" << alx.ideal.gens.size() << "):\n";
    for (const auto& g : alx.ideal.gens) out << "  " << display(g) << "\n";
    out << "\nbetti table (quotient convention):\n" << alx.betti.render();
  }
  return kExitOk;
}

int bench_command(const BenchRequest& request, std::ostream& out, std::ostream& err) {
  out << "p,simplified_ms,complete_ms\n";
  for (int64_t p = 0; p <= request.max_p; ++p) {
    ConstraintSpec spec;
    try {
      spec = build_spec(request.variables, {}, {}, {}, {},
                        BinomialPolynomial::constant(Int(static_cast<long>(p))));
    } catch (const SpecError& e) {
      err << "error at p=" << p << ": " << e.what() << "\n";
      return kExitBadSpec;
    }
    auto t0 = std::chrono::steady_clock::now();
    run_simplified(spec, ResultsMode::None);
    int64_t simplified_ms = ms_since(t0);
    auto t1 = std::chrono::steady_clock::now();
    run_complete(spec, ResultsMode::None);
    int64_t complete_ms = ms_since(t1);
    out << p << "," << simplified_ms << "," << complete_ms << "\n";
  }
  return kExitOk;
}

}  // namespace maxbetti
