#include "tpb/tpb.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>

#include "charclass.hpp"
#include "error.hpp"
#include "fan.hpp"
#include "json.hpp"
#include "moduli.hpp"
#include "onepar.hpp"
#include "plmap.hpp"
#include "serial.hpp"
#include "weyl.hpp"

struct tpb_fan {
  tpb::Fan v;
};
struct tpb_plmap {
  tpb::PLMap v;
};
struct tpb_psi {
  tpb::PsiData v;
};
struct tpb_candidate {
  tpb::Candidate v;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_err(char** err, const std::string& msg) {
  if (err) *err = dup_string(msg);
}

tpb_code code_of(tpb::Err k) {
  switch (k) {
    case tpb::Err::Input:
      return TPB_INPUT;
    case tpb::Err::Invalid:
      return TPB_INVALID;
    default:
      return TPB_INTERNAL;
  }
}

template <typename F>
tpb_code guarded(char** err, F&& f) {
  try {
    return f();
  } catch (const tpb::Error& e) {
    set_err(err, e.what());
    return code_of(e.kind());
  } catch (const std::exception& e) {
    set_err(err, e.what());
    return TPB_INTERNAL;
  }
}

bool require(char** err, bool ok, const char* what) {
  if (!ok) set_err(err, std::string("null argument: ") + what);
  return ok;
}

nlohmann::ordered_json int_json(const tpb::Int& v) {
  if (v.fits_slong_p()) return static_cast<long long>(v.get_si());
  return v.get_str();
}

}  // namespace

extern "C" {

const char* tpb_version(void) { return "1.0.0"; }

void tpb_string_free(char* s) { std::free(s); }

tpb_code tpb_schema(const char* name, char** out, char** err) {
  if (!require(err, out != nullptr, "out")) return TPB_INPUT;
  return guarded(err, [&]() -> tpb_code {
    *out = dup_string(tpb::schema_text(name ? name : ""));
    return TPB_OK;
  });
}

tpb_code tpb_fan_parse(const char* json, const char* source, tpb_fan** out, char** err) {
  if (!require(err, json && out, "json/out")) return TPB_INPUT;
  return guarded(err, [&]() -> tpb_code {
    *out = new tpb_fan{tpb::parse_fan(json, source ? source : "input")};
    return TPB_OK;
  });
}

void tpb_fan_free(tpb_fan* f) { delete f; }

tpb_code tpb_fan_emit(const tpb_fan* f, char** out, char** err) {
  if (!require(err, f && out, "fan/out")) return TPB_INPUT;
  return guarded(err, [&]() -> tpb_code {
    *out = dup_string(tpb::emit_fan(f->v));
    return TPB_OK;
  });
}

int tpb_fan_complete(const tpb_fan* f) { return f && f->v.is_complete() ? 1 : 0; }

int tpb_fan_simplicial(const tpb_fan* f) { return f && f->v.is_simplicial() ? 1 : 0; }

tpb_code tpb_plmap_parse(const char* json, const char* source, const tpb_fan* f,
                         tpb_plmap** out, char** err) {
  if (!require(err, json && f && out, "json/fan/out")) return TPB_INPUT;
  return guarded(err, [&]() -> tpb_code {
    *out = new tpb_plmap{tpb::parse_plmap(json, source ? source : "input", f->v)};
    return TPB_OK;
  });
}

void tpb_plmap_free(tpb_plmap* m) { delete m; }

tpb_code tpb_plmap_emit(const tpb_plmap* m, char** out, char** err) {
  if (!require(err, m && out, "map/out")) return TPB_INPUT;
  return guarded(err, [&]() -> tpb_code {
    *out = dup_string(tpb::emit_plmap(m->v));
    return TPB_OK;
  });
}

tpb_code tpb_plmap_validate(const tpb_fan* f, const tpb_plmap* m, char** report, char** err) {
  if (!require(err, f && m && report, "fan/map/report")) return TPB_INPUT;
  return guarded(err, [&]() -> tpb_code {
    const std::vector<tpb::Violation> vs = tpb::validate(f->v, m->v);
    std::string text;
    for (const tpb::Violation& v : vs) {
      text += v.kind;
      text += ": ";
      text += v.detail;
      text += "\n";
    }
    *report = dup_string(text);
    return vs.empty() ? TPB_OK : TPB_INVALID;
  });
}

tpb_code tpb_chern(const tpb_fan* f, const tpb_plmap* m, size_t generator, char** out,
                   char** err) {
  if (!require(err, f && m && out, "fan/map/out")) return TPB_INPUT;
  return guarded(err, [&]() -> tpb_code {
    if (generator < 1 || generator > m->v.rank)
      tpb::fail(tpb::Err::Input, "BadGenerator",
                "generator index must be between 1 and " + std::to_string(m->v.rank));
    const tpb::Poly q = tpb::elem_sym(m->v.rank, generator);
    *out = dup_string(tpb::emit_piecewise(f->v, tpb::chern_weil(f->v, m->v, q)));
    return TPB_OK;
  });
}

tpb_code tpb_psi_parse(const char* json, const char* source, const tpb_fan* f, tpb_psi** out,
                       char** err) {
  if (!require(err, json && f && out, "json/fan/out")) return TPB_INPUT;
  return guarded(err, [&]() -> tpb_code {
    *out = new tpb_psi{tpb::parse_psi(json, source ? source : "input", f->v)};
    return TPB_OK;
  });
}

void tpb_psi_free(tpb_psi* p) { delete p; }

tpb_code tpb_psi_emit(const tpb_fan* f, const tpb_psi* p, char** out, char** err) {
  if (!require(err, f && p && out, "fan/psi/out")) return TPB_INPUT;
  return guarded(err, [&]() -> tpb_code {
    *out = dup_string(tpb::emit_psi(f->v, p->v));
    return TPB_OK;
  });
}

tpb_code tpb_psi_ray_report(const tpb_fan* f, const tpb_psi* p, char** out, char** err) {
  if (!require(err, f && p && out, "fan/psi/out")) return TPB_INPUT;
  return guarded(err, [&]() -> tpb_code {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (std::size_t rho = 0; rho < f->v.rays().size(); ++rho) {
      const tpb::ZVec w = tpb::psi_ray_weights(f->v, p->v, rho);
      const tpb::ParabolicType type = tpb::parabolic_type(w);
      nlohmann::ordered_json entry;
      entry["ray"] = rho;
      nlohmann::ordered_json wj = nlohmann::ordered_json::array();
      for (const tpb::Int& x : w) wj.push_back(int_json(x));
      entry["weights"] = std::move(wj);
      nlohmann::ordered_json tj = nlohmann::ordered_json::array();
      for (std::size_t m : type) tj.push_back(m);
      entry["type"] = std::move(tj);
      arr.push_back(std::move(entry));
    }
    *out = dup_string(arr.dump(2) + "\n");
    return TPB_OK;
  });
}

tpb_code tpb_psi_warnings(const tpb_fan* f, const tpb_psi* p, char** out, char** err) {
  if (!require(err, f && p && out, "fan/psi/out")) return TPB_INPUT;
  return guarded(err, [&]() -> tpb_code {
    std::string text;
    for (const std::string& w : tpb::psi_degree_warnings(f->v, p->v)) {
      text += w;
      text += "\n";
    }
    *out = dup_string(text);
    return TPB_OK;
  });
}

tpb_code tpb_candidate_parse(const char* json, const char* source, const tpb_fan* f,
                             tpb_candidate** out, char** err) {
  if (!require(err, json && f && out, "json/fan/out")) return TPB_INPUT;
  return guarded(err, [&]() -> tpb_code {
    *out = new tpb_candidate{tpb::parse_candidate(json, source ? source : "input", f->v)};
    return TPB_OK;
  });
}

void tpb_candidate_free(tpb_candidate* c) { delete c; }

tpb_code tpb_candidate_emit(const tpb_candidate* c, char** out, char** err) {
  if (!require(err, c && out, "candidate/out")) return TPB_INPUT;
  return guarded(err, [&]() -> tpb_code {
    *out = dup_string(tpb::emit_candidate(c->v));
    return TPB_OK;
  });
}

tpb_code tpb_moduli_check(const tpb_fan* f, const tpb_psi* p, const tpb_candidate* c,
                          size_t parallel, int witnesses, char** verdict_json, char** err) {
  if (!require(err, f && p && c && verdict_json, "fan/psi/candidate/out")) return TPB_INPUT;
  return guarded(err, [&]() -> tpb_code {
    tpb::Verdict v = tpb::check_membership(f->v, p->v, c->v, parallel);
    if (!witnesses)
      for (tpb::ConeReport& rep : v.cones) rep.witness.reset();
    *verdict_json = dup_string(tpb::emit_verdict(v));
    switch (v.status) {
      case tpb::Status::Accepted:
        return TPB_OK;
      case tpb::Status::Rejected:
        return TPB_INVALID;
      default:
        return TPB_INDETERMINATE;
    }
  });
}

tpb_code tpb_moduli_census(const tpb_fan* f, const tpb_psi* p, size_t limit, size_t parallel,
                           char** out, char** err) {
  if (!require(err, f && p && out, "fan/psi/out")) return TPB_INPUT;
  return guarded(err, [&]() -> tpb_code {
    *out = dup_string(tpb::emit_candidate_list(tpb::census(f->v, p->v, limit, parallel)));
    return TPB_OK;
  });
}

tpb_code tpb_onepar_equivalent(const char* a_json, const char* a_source, const char* b_json,
                               const char* b_source, int* out, char** err) {
  if (!require(err, a_json && b_json && out, "a/b/out")) return TPB_INPUT;
  return guarded(err, [&]() -> tpb_code {
    const tpb::OneParamSubgroup a = tpb::parse_onepar(a_json, a_source ? a_source : "first");
    const tpb::OneParamSubgroup b = tpb::parse_onepar(b_json, b_source ? b_source : "second");
    *out = tpb::equivalent(a, b) ? 1 : 0;
    return TPB_OK;
  });
}

tpb_code tpb_onepar_flag(const char* json, const char* source, char** out, char** err) {
  if (!require(err, json && out, "json/out")) return TPB_INPUT;
  return guarded(err, [&]() -> tpb_code {
    const tpb::OneParamSubgroup l = tpb::parse_onepar(json, source ? source : "input");
    *out = dup_string(tpb::emit_weighted_flag(tpb::parabolic_flag(l)));
    return TPB_OK;
  });
}

tpb_code tpb_klyachko_import(const char* json, const char* source, char** out, char** err) {
  if (!require(err, json && out, "json/out")) return TPB_INPUT;
  return guarded(err, [&]() -> tpb_code {
    const tpb::KlyachkoFiltration fl = tpb::parse_filtration(json, source ? source : "input");
    *out = dup_string(tpb::emit_weighted_flag(tpb::filtration_to_flag(fl)));
    return TPB_OK;
  });
}

tpb_code tpb_klyachko_export(const char* json, const char* source, char** out, char** err) {
  if (!require(err, json && out, "json/out")) return TPB_INPUT;
  return guarded(err, [&]() -> tpb_code {
    const tpb::WeightedFlag wf = tpb::parse_weighted_flag(json, source ? source : "input");
    *out = dup_string(tpb::emit_filtration(tpb::flag_to_filtration(wf)));
    return TPB_OK;
  });
}

}  // extern "C"
