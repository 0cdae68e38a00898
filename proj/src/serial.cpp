#include "serial.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <utility>

#include "json.hpp"

namespace tpb {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Ctx {
  std::string source;
  std::string path = "$";

  Ctx sub(const std::string& key) const { return Ctx{source, path + "." + key}; }
  Ctx idx(std::size_t i) const { return Ctx{source, path + "[" + std::to_string(i) + "]"}; }

  [[noreturn]] void err(const std::string& what) const {
    fail(Err::Input, "ParseError", source + ": " + path + ": " + what);
  }
};

// what() is "name: message"; recover the bare message.
std::string raw_message(const Error& e) {
  return std::string(e.what()).substr(e.name().size() + 2);
}

// Attach source and path to errors thrown by validating constructors.
template <typename F>
auto sourced(const Ctx& c, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    fail(e.kind(), e.name(), c.source + ": " + c.path + ": " + raw_message(e));
  }
}

ordered_json parse_text(const std::string& text, const Ctx& c) {
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded()) c.err("not valid JSON");
  return j;
}

void check_keys(const ordered_json& j, const Ctx& c,
                std::initializer_list<const char*> keys) {
  if (!j.is_object()) c.err("expected an object");
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* k : keys) known = known || item.key() == k;
    if (!known) c.err("unknown key \"" + item.key() + "\"");
  }
}

const ordered_json& need(const ordered_json& j, const Ctx& c, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) c.err(std::string("missing key \"") + key + "\"");
  return *it;
}

const ordered_json* maybe(const ordered_json& j, const char* key) {
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

bool decimal_str(const std::string& s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

Int int_of(const ordered_json& j, const Ctx& c) {
  if (j.is_number_integer() && !j.is_number_unsigned())
    return Int(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_number_unsigned()) {
    Int v;
    v = static_cast<unsigned long>(j.get<std::uint64_t>());
    return v;
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (!decimal_str(s)) c.err("\"" + s + "\" is not a decimal integer");
    return Int(s, 10);
  }
  c.err("expected an integer (bare, or as a decimal string when beyond 64 bits)");
}

Rat rat_of(const ordered_json& j, const Ctx& c) {
  if (j.is_number_integer() || j.is_number_unsigned()) return Rat(int_of(j, c));
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const std::size_t slash = s.find('/');
    if (slash == std::string::npos) {
      if (!decimal_str(s)) c.err("\"" + s + "\" is not an integer or \"p/q\"");
      return Rat(Int(s, 10));
    }
    const std::string p = s.substr(0, slash), q = s.substr(slash + 1);
    if (!decimal_str(p) || !decimal_str(q)) c.err("\"" + s + "\" is not of the form \"p/q\"");
    Int den(q, 10);
    if (den == 0) c.err("\"" + s + "\" has denominator zero");
    Rat r(Int(p, 10), den);
    r.canonicalize();
    return r;
  }
  c.err("expected an integer or a rational string \"p/q\"");
}

std::size_t size_of(const ordered_json& j, const Ctx& c) {
  if (j.is_number_unsigned()) return static_cast<std::size_t>(j.get<std::uint64_t>());
  if (j.is_number_integer()) {
    const std::int64_t v = j.get<std::int64_t>();
    if (v < 0) c.err("expected a nonnegative integer");
    return static_cast<std::size_t>(v);
  }
  c.err("expected a nonnegative integer");
}

const ordered_json& array_of(const ordered_json& j, const Ctx& c) {
  if (!j.is_array()) c.err("expected an array");
  return j;
}

ZVec zvec_of(const ordered_json& j, const Ctx& c) {
  array_of(j, c);
  ZVec v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = int_of(j[i], c.idx(i));
  return v;
}

QVec qvec_of(const ordered_json& j, const Ctx& c) {
  array_of(j, c);
  QVec v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = rat_of(j[i], c.idx(i));
  return v;
}

std::vector<std::size_t> indices_of(const ordered_json& j, const Ctx& c) {
  array_of(j, c);
  std::vector<std::size_t> v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = size_of(j[i], c.idx(i));
  return v;
}

QMat qmat_of(const ordered_json& j, const Ctx& c) {
  array_of(j, c);
  std::vector<QVec> rows(j.size());
  std::size_t cols = 0;
  for (std::size_t i = 0; i < j.size(); ++i) {
    rows[i] = qvec_of(j[i], c.idx(i));
    if (i == 0)
      cols = rows[i].size();
    else if (rows[i].size() != cols)
      c.idx(i).err("matrix rows have unequal lengths");
  }
  return QMat::from_rows(rows, cols);
}

Poly poly_of(const ordered_json& j, const Ctx& c, std::size_t nvars) {
  array_of(j, c);
  Poly p(nvars);
  std::set<Mono> seen;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Ctx tc = c.idx(i);
    const ordered_json& term = array_of(j[i], tc);
    if (term.size() != 2) tc.err("expected [coefficient, [exponents]]");
    const Rat coeff = rat_of(term[0], tc.idx(0));
    const ordered_json& ej = array_of(term[1], tc.idx(1));
    if (ej.size() != nvars)
      tc.idx(1).err("exponent vector needs " + std::to_string(nvars) + " entries");
    Mono m(nvars);
    for (std::size_t k = 0; k < nvars; ++k) {
      const std::size_t e = size_of(ej[k], tc.idx(1).idx(k));
      if (e > 1u << 20) tc.idx(1).idx(k).err("exponent too large");
      m[k] = static_cast<unsigned>(e);
    }
    if (!seen.insert(m).second) tc.err("duplicate monomial");
    p.add_term(m, coeff);
  }
  return p;
}

std::vector<std::pair<std::vector<std::size_t>, Poly>> pieces_of(const ordered_json& j,
                                                                 const Ctx& c,
                                                                 std::size_t nvars) {
  array_of(j, c);
  std::vector<std::pair<std::vector<std::size_t>, Poly>> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Ctx pc = c.idx(i);
    check_keys(j[i], pc, {"cone", "poly"});
    out.emplace_back(indices_of(need(j[i], pc, "cone"), pc.sub("cone")),
                     poly_of(need(j[i], pc, "poly"), pc.sub("poly"), nvars));
  }
  return out;
}

// Emission

ordered_json int_json(const Int& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

ordered_json rat_json(const Rat& x) {
  if (x.get_den() == 1) return int_json(x.get_num());
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

ordered_json zvec_json(const ZVec& v) {
  ordered_json a = ordered_json::array();
  for (const Int& x : v) a.push_back(int_json(x));
  return a;
}

ordered_json qvec_json(const QVec& v) {
  ordered_json a = ordered_json::array();
  for (const Rat& x : v) a.push_back(rat_json(x));
  return a;
}

ordered_json indices_json(const std::vector<std::size_t>& v) {
  ordered_json a = ordered_json::array();
  for (std::size_t i : v) a.push_back(i);
  return a;
}

ordered_json qmat_json(const QMat& m) {
  ordered_json a = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_json(m.at(i, j)));
    a.push_back(std::move(row));
  }
  return a;
}

ordered_json poly_json(const Poly& p) {
  ordered_json a = ordered_json::array();
  for (const auto& [mono, coeff] : p.terms()) {
    ordered_json exps = ordered_json::array();
    for (unsigned e : mono) exps.push_back(e);
    a.push_back(ordered_json::array({rat_json(coeff), std::move(exps)}));
  }
  return a;
}

ordered_json pieces_json(const Fan& fan, const std::vector<Poly>& per_cone) {
  ordered_json a = ordered_json::array();
  for (std::size_t i = 0; i < per_cone.size(); ++i) {
    ordered_json piece;
    piece["cone"] = indices_json(fan.maximal_cones()[i].rays);
    piece["poly"] = poly_json(per_cone[i]);
    a.push_back(std::move(piece));
  }
  return a;
}

std::string finish(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

Fan parse_fan(const std::string& text, const std::string& source) {
  const Ctx c{source};
  const ordered_json j = parse_text(text, c);
  check_keys(j, c, {"lattice_rank", "rays", "maximal_cones"});
  const std::size_t n = size_of(need(j, c, "lattice_rank"), c.sub("lattice_rank"));
  const ordered_json& rj = array_of(need(j, c, "rays"), c.sub("rays"));
  std::vector<ZVec> rays(rj.size());
  for (std::size_t i = 0; i < rj.size(); ++i) rays[i] = zvec_of(rj[i], c.sub("rays").idx(i));
  const ordered_json& cj = array_of(need(j, c, "maximal_cones"), c.sub("maximal_cones"));
  std::vector<std::vector<std::size_t>> cones(cj.size());
  for (std::size_t i = 0; i < cj.size(); ++i)
    cones[i] = indices_of(cj[i], c.sub("maximal_cones").idx(i));
  return sourced(c, [&] { return Fan::build(n, rays, cones); });
}

PLMap parse_plmap(const std::string& text, const std::string& source, const Fan& fan) {
  const Ctx c{source};
  const ordered_json j = parse_text(text, c);
  check_keys(j, c, {"rank", "charts"});
  const std::size_t rank = size_of(need(j, c, "rank"), c.sub("rank"));
  const ordered_json& aj = array_of(need(j, c, "charts"), c.sub("charts"));
  std::vector<Chart> charts;
  charts.reserve(aj.size());
  for (std::size_t i = 0; i < aj.size(); ++i) {
    const Ctx cc = c.sub("charts").idx(i);
    check_keys(aj[i], cc, {"cone", "frame", "weights_matrix"});
    Chart ch;
    ch.cone = indices_of(need(aj[i], cc, "cone"), cc.sub("cone"));
    ch.frame = qmat_of(need(aj[i], cc, "frame"), cc.sub("frame"));
    ch.wmat = qmat_of(need(aj[i], cc, "weights_matrix"), cc.sub("weights_matrix"));
    charts.push_back(std::move(ch));
  }
  return sourced(c, [&] { return make_plmap(fan, rank, std::move(charts)); });
}

PiecewisePoly parse_piecewise(const std::string& text, const std::string& source,
                              const Fan& fan) {
  const Ctx c{source};
  const ordered_json j = parse_text(text, c);
  check_keys(j, c, {"nvars", "pieces"});
  const std::size_t nvars = size_of(need(j, c, "nvars"), c.sub("nvars"));
  if (nvars != fan.lattice_rank())
    c.sub("nvars").err("must equal the fan lattice rank " +
                       std::to_string(fan.lattice_rank()));
  auto pieces = pieces_of(need(j, c, "pieces"), c.sub("pieces"), nvars);
  return sourced(c, [&] { return make_piecewise(fan, std::move(pieces)); });
}

PsiData parse_psi(const std::string& text, const std::string& source, const Fan& fan) {
  const Ctx c{source};
  const ordered_json j = parse_text(text, c);
  check_keys(j, c, {"rank", "classes"});
  const std::size_t rank = size_of(need(j, c, "rank"), c.sub("rank"));
  const ordered_json& kj = array_of(need(j, c, "classes"), c.sub("classes"));
  std::vector<PiecewisePoly> classes;
  classes.reserve(kj.size());
  for (std::size_t k = 0; k < kj.size(); ++k) {
    const Ctx cc = c.sub("classes").idx(k);
    auto pieces = pieces_of(kj[k], cc, fan.lattice_rank());
    classes.push_back(sourced(cc, [&] { return make_piecewise(fan, std::move(pieces)); }));
  }
  return sourced(c, [&] { return make_psi(fan, rank, std::move(classes)); });
}

Candidate parse_candidate(const std::string& text, const std::string& source, const Fan& fan) {
  const Ctx c{source};
  const ordered_json j = parse_text(text, c);
  check_keys(j, c, {"rank", "flags"});
  const std::size_t rank = size_of(need(j, c, "rank"), c.sub("rank"));
  const ordered_json& fj = array_of(need(j, c, "flags"), c.sub("flags"));
  std::vector<PlainFlag> flags;
  flags.reserve(fj.size());
  for (std::size_t i = 0; i < fj.size(); ++i) {
    const Ctx fc = c.sub("flags").idx(i);
    const ordered_json& sj = array_of(fj[i], fc);
    std::vector<QMat> steps(sj.size());
    for (std::size_t s = 0; s < sj.size(); ++s) steps[s] = qmat_of(sj[s], fc.idx(s));
    flags.push_back(sourced(fc, [&] { return make_plain_flag(rank, steps); }));
  }
  return sourced(c, [&] { return make_candidate(fan, rank, std::move(flags)); });
}

Verdict parse_verdict(const std::string& text, const std::string& source) {
  const Ctx c{source};
  const ordered_json j = parse_text(text, c);
  check_keys(j, c, {"status", "cones"});
  const ordered_json& sj = need(j, c, "status");
  if (!sj.is_string()) c.sub("status").err("expected a string");
  const std::string s = sj.get<std::string>();
  Verdict v;
  if (s == "ACCEPTED")
    v.status = Status::Accepted;
  else if (s == "REJECTED")
    v.status = Status::Rejected;
  else if (s == "INDETERMINATE")
    v.status = Status::Indeterminate;
  else
    c.sub("status").err("unknown status \"" + s + "\"");

  const ordered_json& cj = array_of(need(j, c, "cones"), c.sub("cones"));
  for (std::size_t i = 0; i < cj.size(); ++i) {
    const Ctx rc = c.sub("cones").idx(i);
    check_keys(cj[i], rc, {"cone", "failure", "witness", "kernel_failures", "residuals"});
    ConeReport rep;
    rep.cone = indices_of(need(cj[i], rc, "cone"), rc.sub("cone"));
    if (const ordered_json* f = maybe(cj[i], "failure")) {
      if (!f->is_string()) rc.sub("failure").err("expected a string");
      rep.failure = f->get<std::string>();
      if (rep.failure != "NoCommonSplitting" && rep.failure != "UnbalancedWeights")
        rc.sub("failure").err("unknown failure kind \"" + rep.failure + "\"");
    }
    if (const ordered_json* w = maybe(cj[i], "witness")) {
      const Ctx wc = rc.sub("witness");
      check_keys(*w, wc, {"basis", "gammas"});
      ConeWitness wit;
      wit.basis = qmat_of(need(*w, wc, "basis"), wc.sub("basis"));
      const ordered_json& gj = array_of(need(*w, wc, "gammas"), wc.sub("gammas"));
      for (std::size_t t = 0; t < gj.size(); ++t)
        wit.gammas.push_back(zvec_of(gj[t], wc.sub("gammas").idx(t)));
      rep.witness = std::move(wit);
    }
    if (const ordered_json* k = maybe(cj[i], "kernel_failures")) {
      const ordered_json& ka = array_of(*k, rc.sub("kernel_failures"));
      for (std::size_t t = 0; t < ka.size(); ++t)
        rep.kernel_failures.push_back(qvec_of(ka[t], rc.sub("kernel_failures").idx(t)));
    }
    if (const ordered_json* r = maybe(cj[i], "residuals")) {
      const ordered_json& ra = array_of(*r, rc.sub("residuals"));
      for (std::size_t t = 0; t < ra.size(); ++t)
        rep.residuals.push_back(qvec_of(ra[t], rc.sub("residuals").idx(t)));
    }
    if (rep.kernel_failures.size() != rep.residuals.size())
      rc.err("kernel_failures and residuals must have the same length");
    v.cones.push_back(std::move(rep));
  }
  return v;
}

OneParamSubgroup parse_onepar(const std::string& text, const std::string& source) {
  const Ctx c{source};
  const ordered_json j = parse_text(text, c);
  check_keys(j, c, {"rank", "frame", "weights"});
  const std::size_t rank = size_of(need(j, c, "rank"), c.sub("rank"));
  const QMat frame = qmat_of(need(j, c, "frame"), c.sub("frame"));
  const ZVec weights = zvec_of(need(j, c, "weights"), c.sub("weights"));
  if (weights.size() != rank)
    c.sub("weights").err("needs " + std::to_string(rank) + " entries");
  return sourced(c, [&] { return make_onepar(frame, weights); });
}

WeightedFlag parse_weighted_flag(const std::string& text, const std::string& source) {
  const Ctx c{source};
  const ordered_json j = parse_text(text, c);
  check_keys(j, c, {"rank", "steps", "weights"});
  const std::size_t rank = size_of(need(j, c, "rank"), c.sub("rank"));
  const ordered_json& sj = array_of(need(j, c, "steps"), c.sub("steps"));
  std::vector<QMat> steps(sj.size());
  for (std::size_t i = 0; i < sj.size(); ++i) steps[i] = qmat_of(sj[i], c.sub("steps").idx(i));
  const QVec weights = qvec_of(need(j, c, "weights"), c.sub("weights"));
  return sourced(c, [&] { return make_weighted_flag(rank, steps, weights); });
}

KlyachkoFiltration parse_filtration(const std::string& text, const std::string& source) {
  const Ctx c{source};
  const ordered_json j = parse_text(text, c);
  check_keys(j, c, {"rank", "jumps"});
  const std::size_t rank = size_of(need(j, c, "rank"), c.sub("rank"));
  const ordered_json& jj = array_of(need(j, c, "jumps"), c.sub("jumps"));
  std::vector<std::pair<Int, QMat>> jumps;
  jumps.reserve(jj.size());
  for (std::size_t i = 0; i < jj.size(); ++i) {
    const Ctx jc = c.sub("jumps").idx(i);
    check_keys(jj[i], jc, {"index", "basis"});
    jumps.emplace_back(int_of(need(jj[i], jc, "index"), jc.sub("index")),
                       qmat_of(need(jj[i], jc, "basis"), jc.sub("basis")));
  }
  return sourced(c, [&] { return make_filtration(rank, jumps); });
}

std::string emit_fan(const Fan& f) {
  ordered_json j;
  j["lattice_rank"] = f.lattice_rank();
  ordered_json rays = ordered_json::array();
  for (const ZVec& r : f.rays()) rays.push_back(zvec_json(r));
  j["rays"] = std::move(rays);
  ordered_json cones = ordered_json::array();
  for (const Cone& c : f.maximal_cones()) cones.push_back(indices_json(c.rays));
  j["maximal_cones"] = std::move(cones);
  return finish(j);
}

std::string emit_plmap(const PLMap& m) {
  ordered_json j;
  j["rank"] = m.rank;
  ordered_json charts = ordered_json::array();
  for (const Chart& ch : m.charts) {
    ordered_json cj;
    cj["cone"] = indices_json(ch.cone);
    cj["frame"] = qmat_json(ch.frame);
    cj["weights_matrix"] = qmat_json(ch.wmat);
    charts.push_back(std::move(cj));
  }
  j["charts"] = std::move(charts);
  return finish(j);
}

std::string emit_piecewise(const Fan& fan, const PiecewisePoly& pp) {
  ordered_json j;
  j["nvars"] = pp.nvars;
  j["pieces"] = pieces_json(fan, pp.per_cone);
  return finish(j);
}

std::string emit_psi(const Fan& fan, const PsiData& psi) {
  ordered_json j;
  j["rank"] = psi.rank;
  ordered_json classes = ordered_json::array();
  for (const PiecewisePoly& pp : psi.classes) classes.push_back(pieces_json(fan, pp.per_cone));
  j["classes"] = std::move(classes);
  return finish(j);
}

namespace {

ordered_json candidate_json(const Candidate& c) {
  ordered_json j;
  j["rank"] = c.rank;
  ordered_json flags = ordered_json::array();
  for (const PlainFlag& f : c.flags) {
    ordered_json steps = ordered_json::array();
    for (std::size_t s = 0; s + 1 < f.steps.size(); ++s) steps.push_back(qmat_json(f.steps[s]));
    flags.push_back(std::move(steps));
  }
  j["flags"] = std::move(flags);
  return j;
}

}  // namespace

std::string emit_candidate(const Candidate& c) { return finish(candidate_json(c)); }

std::string emit_candidate_list(const std::vector<Candidate>& cs) {
  ordered_json a = ordered_json::array();
  for (const Candidate& c : cs) a.push_back(candidate_json(c));
  return finish(a);
}

std::string emit_verdict(const Verdict& v) {
  ordered_json j;
  j["status"] = status_name(v.status);
  ordered_json cones = ordered_json::array();
  for (const ConeReport& rep : v.cones) {
    ordered_json rj;
    rj["cone"] = indices_json(rep.cone);
    if (!rep.failure.empty()) rj["failure"] = rep.failure;
    if (rep.witness) {
      ordered_json wj;
      wj["basis"] = qmat_json(rep.witness->basis);
      ordered_json gammas = ordered_json::array();
      for (const ZVec& g : rep.witness->gammas) gammas.push_back(zvec_json(g));
      wj["gammas"] = std::move(gammas);
      rj["witness"] = std::move(wj);
    }
    if (!rep.kernel_failures.empty()) {
      ordered_json ks = ordered_json::array();
      for (const QVec& k : rep.kernel_failures) ks.push_back(qvec_json(k));
      rj["kernel_failures"] = std::move(ks);
      ordered_json rs = ordered_json::array();
      for (const QVec& r : rep.residuals) rs.push_back(qvec_json(r));
      rj["residuals"] = std::move(rs);
    }
    cones.push_back(std::move(rj));
  }
  j["cones"] = std::move(cones);
  return finish(j);
}

std::string emit_onepar(const OneParamSubgroup& l) {
  ordered_json j;
  j["rank"] = l.rank();
  j["frame"] = qmat_json(l.frame);
  j["weights"] = zvec_json(l.weights);
  return finish(j);
}

std::string emit_weighted_flag(const WeightedFlag& wf) {
  ordered_json j;
  j["rank"] = wf.rank;
  ordered_json steps = ordered_json::array();
  for (const QMat& s : wf.steps) steps.push_back(qmat_json(s));
  j["steps"] = std::move(steps);
  j["weights"] = qvec_json(wf.weights);
  return finish(j);
}

std::string emit_filtration(const KlyachkoFiltration& f) {
  ordered_json j;
  j["rank"] = f.rank;
  ordered_json jumps = ordered_json::array();
  for (const auto& [index, basis] : f.jumps) {
    ordered_json jj;
    jj["index"] = int_json(index);
    jj["basis"] = qmat_json(basis);
    jumps.push_back(std::move(jj));
  }
  j["jumps"] = std::move(jumps);
  return finish(j);
}

namespace {

const std::map<std::string, const char*>& schemas() {
  static const std::map<std::string, const char*> m = {
      {"fan", R"(fan: complete or partial polyhedral fan
{
  "lattice_rank": n,                 positive integer
  "rays": [[int x n], ...],          primitive, pairwise distinct
  "maximal_cones": [[ray index, ...], ...]
                                     strongly convex, pairwise intersecting in
                                     common faces, none contained in another,
                                     every ray used
})"},
      {"plmap", R"(plmap: piecewise linear map given by one chart per maximal cone
{
  "rank": r,
  "charts": [
    {
      "cone": [ray indices],         must match a maximal cone of the fan
      "frame": r x r matrix,         invertible; rationals are bare integers
                                     or strings "p/q"
      "weights_matrix": r x n matrix
    }, ...
  ]
})"},
      {"piecewise", R"(piecewise: piecewise polynomial on a fan
{
  "nvars": n,                        must equal the fan lattice rank
  "pieces": [
    {
      "cone": [ray indices],
      "poly": [[coeff, [e1, ..., en]], ...]
                                     sparse terms, exponents nonnegative
    }, ...
  ]
}
Adjacent pieces must agree on shared faces.)"},
      {"psi", R"(psi: tuple of piecewise polynomial classes, one per generator degree
{
  "rank": r,
  "classes": [pieces, ...]           exactly r entries; each entry is the
                                     "pieces" array of the piecewise format
})"},
      {"candidate", R"(candidate: one flag of Q^r per fan ray
{
  "rank": r,
  "flags": [
    [step matrix, ...],              proper steps only, strictly increasing;
                                     the full space is implied; [] is the
                                     trivial flag
    ...
  ]                                  one entry per ray, in ray order
})"},
      {"verdict", R"(verdict: result of the membership test
{
  "status": "ACCEPTED" | "REJECTED" | "INDETERMINATE",
  "cones": [
    {
      "cone": [ray indices],
      "failure": "NoCommonSplitting" | "UnbalancedWeights",   when failed
      "witness": {                   present when a splitting exists
        "basis": r x r matrix,       columns adapted to every ray flag
        "gammas": [[int x r], ...]   weight vector per cone ray
      },
      "kernel_failures": [[rational, ...], ...],  ray relations violated
      "residuals": [[rational, ...], ...]         their nonzero residuals
    }, ...
  ]
})"},
      {"onepar", R"(onepar: one-parameter subgroup s -> g diag(s^a1, ..., s^ar) g^-1
{
  "rank": r,
  "frame": r x r matrix,             invertible
  "weights": [int x r]
})"},
      {"weighted-flag", R"(weighted-flag: point of the extended building
{
  "rank": r,
  "steps": [matrix, ...],            strictly increasing, last spans Q^r
  "weights": [rational, ...]         strictly decreasing, one per step
})"},
      {"filtration", R"(filtration: decreasing integer-indexed filtration of Q^r
{
  "rank": r,
  "jumps": [
    {"index": int, "basis": matrix}, ...
  ]                                  indices strictly decreasing, subspaces
                                     strictly increasing, last spans Q^r
})"},
  };
  return m;
}

}  // namespace

std::string schema_text(const std::string& name) {
  if (name.empty()) {
    std::string all;
    for (const auto& [k, v] : schemas()) {
      if (!all.empty()) all += "\n\n";
      all += v;
    }
    return all + "\n";
  }
  auto it = schemas().find(name);
  if (it == schemas().end())
    fail(Err::Input, "UnknownSchema", "no format named \"" + name + "\"");
  return std::string(it->second) + "\n";
}

std::vector<std::string> schema_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : schemas()) out.push_back(k);
  return out;
}

}  // namespace tpb
