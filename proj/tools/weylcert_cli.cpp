// Command-line front end; talks to the engine exclusively through the C API.
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "weylcert.h"

namespace {

struct EngineDeleter {
  void operator()(wc_engine* e) const { wc_engine_destroy(e); }
};

struct StringDeleter {
  void operator()(char* s) const { wc_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

std::string render_text(const nlohmann::json& report) {
  std::string out = "suite " + report["suite"].get<std::string>() + " (";
  const auto& p = report["params"];
  out += "p=" + std::to_string(p["p"].get<long>()) + " n=" + std::to_string(p["n"].get<long>()) +
         " c=" + std::to_string(p["c"].get<long>()) +
         " cprime=" + std::to_string(p["cprime"].get<long>()) +
         " seed=" + std::to_string(p["seed"].get<long>()) + ")\n";
  for (const auto& c : report["checks"]) {
    out += "  [" + c["status"].get<std::string>() + "] " + c["claim"].get<std::string>() + " <" +
           c["citation"].get<std::string>() + ">";
    std::string w = c["witness"].get<std::string>();
    if (!w.empty()) out += " -- " + w;
    out += "\n";
  }
  out += "verdict: " + report["verdict"].get<std::string>() + "\n";
  return out;
}

int emit(const std::string& payload, const std::string& out_file) {
  if (out_file.empty()) {
    std::cout << payload;
    return 0;
  }
  std::ofstream f(out_file);
  if (!f) {
    std::cerr << "error: cannot open output file " << out_file << "\n";
    return 2;
  }
  f << payload;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification engine for Weyl-algebra Brauer classes"};
  app.require_subcommand(1);

  std::string suite, format = "json", out_file, expr_text;
  wc_suite_params params{3, 1, 1, 1, 0};
  bool tensor = false;

  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  verify->add_option("suite", suite, "suite name")->required();
  verify->add_option("--p", params.p, "odd prime modulus");
  verify->add_option("--n", params.n, "number of generator pairs");
  verify->add_option("--c", params.c, "first twist parameter");
  verify->add_option("--cprime", params.cprime, "second twist parameter");
  verify->add_option("--seed", params.seed, "seed for randomized checks");
  verify->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--out", out_file, "write the report to a file");

  auto* list = app.add_subcommand("list", "print the available suite names");

  auto* eval = app.add_subcommand("eval", "normalize an expression");
  eval->add_option("expression", expr_text, "expression text")->required();
  eval->add_option("--p", params.p, "odd prime modulus");
  eval->add_option("--n", params.n, "number of generator pairs");
  eval->add_flag("--tensor", tensor, "bring the y-generators of the tensor square into scope");
  eval->add_option("--out", out_file, "write the result to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  std::unique_ptr<wc_engine, EngineDeleter> engine(wc_engine_create());
  if (!engine) {
    std::cerr << "error: engine creation failed\n";
    return 2;
  }

  if (list->parsed()) {
    char* raw = nullptr;
    if (wc_suite_list(engine.get(), &raw) != WC_OK) {
      std::cerr << "error: " << wc_last_error(engine.get()) << "\n";
      return 2;
    }
    CString names(raw);
    for (const auto& n : nlohmann::json::parse(names.get())) {
      std::cout << n.get<std::string>() << "\n";
    }
    return 0;
  }

  if (eval->parsed()) {
    char* raw = nullptr;
    wc_status st =
        wc_eval(engine.get(), expr_text.c_str(), params.p, params.n, tensor ? 1 : 0, &raw);
    if (st != WC_OK) {
      std::cerr << "error: " << wc_last_error(engine.get()) << "\n";
      return 2;
    }
    CString result(raw);
    return emit(std::string(result.get()) + "\n", out_file);
  }

  // verify
  char* raw = nullptr;
  wc_status st = wc_run_suite(engine.get(), suite.c_str(), &params, 1, &raw);
  if (st != WC_OK && st != WC_ERR_VERIFICATION_FAILED) {
    std::cerr << "error: " << wc_last_error(engine.get()) << "\n";
    return 2;
  }
  CString report(raw);
  std::string payload;
  if (format == "json") {
    payload = std::string(report.get()) + "\n";
  } else {
    payload = render_text(nlohmann::json::parse(report.get()));
  }
  int rc = emit(payload, out_file);
  if (rc != 0) return rc;
  return st == WC_OK ? 0 : 1;
}
