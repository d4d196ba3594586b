#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "maxbetti/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "Sharp upper bounds for the total Betti numbers of saturated ideals whose "
      "Hilbert function satisfies the given constraints"};
  app.require_subcommand(0, 1);

  int64_t variables = 0;
  std::string poly_text, hf_lower_text, hf_upper_text, diff_lower_text, diff_upper_text;
  std::string algorithm_text = "automatic", results_text = "none", request_path;
  bool json_output = false, verify = false;

  app.add_option("-n,--variables", variables, "variables of the ambient polynomial ring S");
  app.add_option("-p,--hilbert-polynomial", poly_text,
                 "Hilbert polynomial: power-basis coefficients, highest degree first "
                 "(\"49\", \"3,-6,175\")");
  app.add_option("--hf-lower", hf_lower_text,
                 "lower bounds on h: positional \",,,8,8,5,5\" or named \"3=8,4=8\"");
  app.add_option("--hf-upper", hf_upper_text, "upper bounds on h, same format");
  app.add_option("--diff-lower", diff_lower_text, "lower bounds on the difference function");
  app.add_option("--diff-upper", diff_upper_text, "upper bounds on the difference function");
  app.add_option("--algorithm", algorithm_text, "automatic|simplified|complete")
      ->capture_default_str();
  app.add_option("--results", results_text, "none|one|all-max-betti-sum|all")
      ->capture_default_str();
  app.add_flag("--json", json_output, "emit the JSON response document");
  app.add_flag("--verify", verify, "cross-check the result against brute-force enumeration");
  app.add_option("--request", request_path, "read a JSON request document instead of flags");

  auto* ideal = app.add_subcommand(
      "ideal", "saturated almost-lexsegment ideal and Betti table for a Hilbert function");
  int64_t ideal_vars = 0;
  std::string ideal_h;
  bool ideal_json = false;
  ideal->add_option("-n,--variables", ideal_vars, "variables of the ambient ring")->required();
  ideal->add_option("--hf", ideal_h, "h values from degree 0, constant afterwards: \"1,5,11\"")
      ->required();
  ideal->add_flag("--json", ideal_json, "emit structured output");

  auto* bench =
      app.add_subcommand("bench", "constant-polynomial timing sweep, CSV on standard output");
  maxbetti::BenchRequest bench_req;
  bench->add_option("-n,--variables", bench_req.variables, "variables of the ambient ring")
      ->capture_default_str();
  bench->add_option("--max-p", bench_req.max_p, "largest constant polynomial")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*ideal)
      return maxbetti::ideal_command(ideal_vars, maxbetti::parse_int_list(ideal_h), ideal_json,
                                     std::cout, std::cerr);
    if (*bench) return maxbetti::bench_command(bench_req, std::cout, std::cerr);

    maxbetti::SolveRequest req;
    if (!request_path.empty()) {
      std::ifstream in(request_path);
      if (!in) {
        std::cerr << "error: cannot open " << request_path << "\n";
        return maxbetti::kExitBadSpec;
      }
      req = maxbetti::request_from_json(nlohmann::json::parse(in));
      if (verify) req.verify = true;
    } else {
      if (variables <= 0) {
        std::cerr << "error: --variables is required\n";
        return maxbetti::kExitBadSpec;
      }
      req.variables = variables;
      if (!poly_text.empty()) req.hilbert_polynomial = maxbetti::parse_polynomial(poly_text);
      req.hf_lower = maxbetti::parse_bound_list(hf_lower_text);
      req.hf_upper = maxbetti::parse_bound_list(hf_upper_text);
      req.diff_lower = maxbetti::parse_bound_list(diff_lower_text);
      req.diff_upper = maxbetti::parse_bound_list(diff_upper_text);
      req.algorithm = maxbetti::parse_algorithm(algorithm_text);
      req.results = maxbetti::parse_results(results_text);
      req.verify = verify;
    }
    return maxbetti::solve_command(req, json_output, std::cout, std::cerr);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return maxbetti::kExitBadSpec;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return maxbetti::kExitBadSpec;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return maxbetti::kExitBadSpec;
  }
}
