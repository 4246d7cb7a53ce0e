// Command-line front end: enumerate the saturated Borel-fixed ideals of
// K[x_0..x_n] with a prescribed Hilbert polynomial.
//
// Exit codes: 0 success, 2 malformed or inadmissible polynomial,
// 3 degree too large for the ambient space, 4 a size cap exceeded,
// 5 validation failed.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "borel/enumerate.hpp"
#include "borel/errors.hpp"
#include "borel/hilbert.hpp"
#include "borel/validate.hpp"

namespace {

constexpr int kExitBadPolynomial = 2;
constexpr int kExitDegreeTooLarge = 3;
constexpr int kExitCapExceeded = 4;
constexpr int kExitValidationFailed = 5;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Enumerate the saturated Borel-fixed ideals of K[x0..xn] with a "
      "prescribed Hilbert polynomial"};

  int n = 0;
  std::string hilbert_text;
  std::string format = "text";
  std::string tree_path;
  bool count_only = false;
  bool validate = false;
  int jobs = 0;
  int max_gotzmann = 64;

  app.add_option("--n", n, "Ambient projective space dimension")->required();
  app.add_option("--hilbert", hilbert_text,
                 "Hilbert polynomial in t, e.g. \"5t-2\" or \"3/2t^2+5/2t-1\"")
      ->required();
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--tree", tree_path,
                 "Write the recursion tree in DOT format to this path");
  app.add_flag("--count-only", count_only,
               "Report the count, omit the ideals");
  app.add_flag("--validate", validate,
               "Cross-check every output against the reference oracle");
  app.add_option("--jobs", jobs,
                 "Worker threads (default: available parallelism)");
  app.add_option("--max-gotzmann", max_gotzmann,
                 "Refuse polynomials whose Gotzmann number exceeds this");

  CLI11_PARSE(app, argc, argv);

  try {
    const borel::HilbertPolynomial p =
        borel::HilbertPolynomial::parse(hilbert_text);
    const borel::EnumerationProblem problem =
        borel::EnumerationProblem::create(n, p, max_gotzmann);

    borel::EnumerateOptions options;
    options.jobs = jobs > 0
                       ? jobs
                       : std::max(1u, std::thread::hardware_concurrency());
    borel::TreeTrace trace;
    if (!tree_path.empty()) options.trace = &trace;

    const auto start = std::chrono::steady_clock::now();
    const std::vector<borel::IdealOutput> ideals =
        borel::borel_fixed_ideals_generator(problem, options);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();

    if (!tree_path.empty()) {
      std::ofstream os(tree_path);
      if (!os) throw borel::Error("cannot write tree file: " + tree_path);
      trace.write_dot(os);
    }

    borel::ValidationReport report;
    if (validate) report = borel::validate_outputs(problem, ideals);

    if (format == "json") {
      nlohmann::ordered_json doc;
      doc["n"] = problem.n;
      doc["hilbertPolynomial"] = problem.p.to_string();
      doc["gotzmannNumber"] = problem.r;
      doc["count"] = ideals.size();
      doc["elapsedSeconds"] = elapsed;
      if (!count_only) {
        auto& list = doc["ideals"] = nlohmann::ordered_json::array();
        for (const auto& ideal : ideals) {
          auto gens = nlohmann::ordered_json::array();
          for (const auto& g : ideal.generators)
            gens.push_back(g.to_string());
          list.push_back(std::move(gens));
        }
      }
      if (validate) {
        doc["validation"] = {{"passed", report.passed},
                             {"idealsChecked", report.ideals_checked},
                             {"violations", report.violations}};
      }
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << "# n: " << problem.n << "\n";
      std::cout << "# hilbertPolynomial: " << problem.p.to_string() << "\n";
      std::cout << "# gotzmannNumber: " << problem.r << "\n";
      std::cout << "# count: " << ideals.size() << "\n";
      std::cout << "# elapsedSeconds: " << elapsed << "\n";
      if (validate)
        std::cout << "# validation: " << (report.passed ? "passed" : "FAILED")
                  << " (" << report.ideals_checked << " ideals checked)\n";
      if (!count_only)
        for (const auto& ideal : ideals)
          std::cout << ideal.to_string() << "\n";
    }

    if (validate && !report.passed) {
      for (const auto& v : report.violations)
        std::cerr << "validation: " << v << "\n";
      return kExitValidationFailed;
    }
    return 0;
  } catch (const borel::MalformedPolynomial& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadPolynomial;
  } catch (const borel::NotAdmissible& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadPolynomial;
  } catch (const borel::DegreeTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDegreeTooLarge;
  } catch (const borel::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
