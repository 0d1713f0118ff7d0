#include "weylcert.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <string>

#include "core/parser.hpp"
#include "core/report.hpp"

struct wc_engine {
  std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

wc_status store_error(wc_engine* e, wc_status st, const std::string& msg) {
  if (e) e->last_error = msg;
  return st;
}

}  // namespace

extern "C" {

const char* wc_version(void) { return "1.0.0"; }

wc_engine* wc_engine_create(void) { return new (std::nothrow) wc_engine(); }

void wc_engine_destroy(wc_engine* e) { delete e; }

const char* wc_last_error(const wc_engine* e) { return e ? e->last_error.c_str() : ""; }

wc_status wc_suite_list(wc_engine* e, char** names_json) {
  if (!e || !names_json) return store_error(e, WC_ERR_INVALID_ARGUMENT, "null argument");
  nlohmann::json j = wcert::report::suite_names();
  *names_json = dup_string(j.dump());
  e->last_error.clear();
  return WC_OK;
}

wc_status wc_run_suite(wc_engine* e, const char* suite, const wc_suite_params* params,
                       int with_timings, char** report_json) {
  if (!e || !suite || !report_json)
    return store_error(e, WC_ERR_INVALID_ARGUMENT, "null argument");
  const auto& names = wcert::report::suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    return store_error(e, WC_ERR_INVALID_ARGUMENT, std::string("unknown suite: ") + suite);
  wcert::report::SuiteParams sp;
  if (params) {
    sp.p = params->p;
    sp.n = params->n;
    sp.c = params->c;
    sp.cprime = params->cprime;
    sp.seed = params->seed;
  }
  try {
    wcert::report::Report rep = wcert::report::run_suite(suite, sp);
    *report_json = dup_string(rep.to_json(with_timings != 0).dump(2));
    e->last_error.clear();
    return rep.passed() ? WC_OK
                        : store_error(e, WC_ERR_VERIFICATION_FAILED, "suite verdict: fail");
  } catch (const wcert::ring::ArithmeticError& ex) {
    return store_error(e, WC_ERR_ARITHMETIC, ex.what());
  } catch (const std::exception& ex) {
    return store_error(e, WC_ERR_UNKNOWN, ex.what());
  }
}

wc_status wc_eval(wc_engine* e, const char* text, long p, unsigned n, int tensor,
                  char** normal_form) {
  if (!e || !text || !normal_form)
    return store_error(e, WC_ERR_INVALID_ARGUMENT, "null argument");
  try {
    auto ast = wcert::expr::parse(text);
    std::string result;
    if (tensor) {
      wcert::weyl::TensorSquareContext ctx(p, n);
      auto value = wcert::expr::eval_tensor(ast, ctx);
      result = wcert::weyl::reduce_tensor(ctx, value).to_string();
    } else {
      auto ctx = wcert::weyl::make_weyl_context(p, n);
      result = wcert::expr::eval_weyl(ast, ctx).to_string();
    }
    *normal_form = dup_string(result);
    e->last_error.clear();
    return WC_OK;
  } catch (const wcert::expr::ParseError& ex) {
    return store_error(e, WC_ERR_PARSE, ex.what());
  } catch (const wcert::ring::ArithmeticError& ex) {
    return store_error(e, WC_ERR_ARITHMETIC, ex.what());
  } catch (const std::exception& ex) {
    return store_error(e, WC_ERR_UNKNOWN, ex.what());
  }
}

void wc_string_free(char* s) { std::free(s); }

}  // extern "C"
