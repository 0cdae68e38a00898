// Command line front end. Talks to the library exclusively through the C API
// so it exercises the same surface as any other client.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "tpb/tpb.h"

namespace {

struct Str {
    char* p = nullptr;
    ~Str() { tpb_string_free(p); }
    std::string get() const { return p ? std::string(p) : std::string(); }
};

struct FanPtr {
    tpb_fan* p = nullptr;
    ~FanPtr() { tpb_fan_free(p); }
};

struct MapPtr {
    tpb_plmap* p = nullptr;
    ~MapPtr() { tpb_plmap_free(p); }
};

struct PsiPtr {
    tpb_psi* p = nullptr;
    ~PsiPtr() { tpb_psi_free(p); }
};

struct CandPtr {
    tpb_candidate* p = nullptr;
    ~CandPtr() { tpb_candidate_free(p); }
};

void put(const std::string& text) { std::fwrite(text.data(), 1, text.size(), stdout); }

int report(tpb_code code, const Str& err) {
    const std::string msg = err.get();
    if (!msg.empty()) std::fprintf(stderr, "%s\n", msg.c_str());
    return static_cast<int>(code);
}

int missing(const char* what) {
    std::fprintf(stderr, "missing %s\n", what);
    return 3;
}

bool slurp(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

int cannot_read(const std::string& path) {
    std::fprintf(stderr, "%s: cannot read file\n", path.c_str());
    return 3;
}

int print_schemas(std::initializer_list<const char*> names) {
    for (const char* name : names) {
        Str out, err;
        const tpb_code code = tpb_schema(name, &out.p, &err.p);
        if (code != TPB_OK) return report(code, err);
        put(out.get());
    }
    return 0;
}

// Loaders return 0 on success, otherwise the exit code to propagate.

int load_fan(const std::string& path, FanPtr& f) {
    if (path.empty()) return missing("fan file");
    std::string text;
    if (!slurp(path, text)) return cannot_read(path);
    Str err;
    const tpb_code code = tpb_fan_parse(text.c_str(), path.c_str(), &f.p, &err.p);
    return code == TPB_OK ? 0 : report(code, err);
}

int load_plmap(const std::string& path, const FanPtr& f, MapPtr& m) {
    if (path.empty()) return missing("map file");
    std::string text;
    if (!slurp(path, text)) return cannot_read(path);
    Str err;
    const tpb_code code = tpb_plmap_parse(text.c_str(), path.c_str(), f.p, &m.p, &err.p);
    return code == TPB_OK ? 0 : report(code, err);
}

int load_psi(const std::string& path, const FanPtr& f, PsiPtr& p) {
    if (path.empty()) return missing("class file");
    std::string text;
    if (!slurp(path, text)) return cannot_read(path);
    Str err;
    const tpb_code code = tpb_psi_parse(text.c_str(), path.c_str(), f.p, &p.p, &err.p);
    return code == TPB_OK ? 0 : report(code, err);
}

int load_candidate(const std::string& path, const FanPtr& f, CandPtr& c) {
    if (path.empty()) return missing("candidate file");
    std::string text;
    if (!slurp(path, text)) return cannot_read(path);
    Str err;
    const tpb_code code = tpb_candidate_parse(text.c_str(), path.c_str(), f.p, &c.p, &err.p);
    return code == TPB_OK ? 0 : report(code, err);
}

int run_fan_validate(const std::string& path) {
    FanPtr f;
    if (int rc = load_fan(path, f)) return rc;
    Str out, err;
    const tpb_code code = tpb_fan_emit(f.p, &out.p, &err.p);
    if (code != TPB_OK) return report(code, err);
    put(out.get());
    return 0;
}

int run_fan_complete(const std::string& path) {
    FanPtr f;
    if (int rc = load_fan(path, f)) return rc;
    if (tpb_fan_complete(f.p)) {
        std::puts("complete");
        return 0;
    }
    std::puts("incomplete");
    return 1;
}

int run_onepar_equiv(const std::string& a_path, const std::string& b_path) {
    if (a_path.empty() || b_path.empty()) return missing("two subgroup files");
    std::string a, b;
    if (!slurp(a_path, a)) return cannot_read(a_path);
    if (!slurp(b_path, b)) return cannot_read(b_path);
    int eq = 0;
    Str err;
    const tpb_code code =
        tpb_onepar_equivalent(a.c_str(), a_path.c_str(), b.c_str(), b_path.c_str(), &eq, &err.p);
    if (code != TPB_OK) return report(code, err);
    std::puts(eq ? "equivalent" : "inequivalent");
    return eq ? 0 : 1;
}

int run_onepar_flag(const std::string& path) {
    if (path.empty()) return missing("subgroup file");
    std::string text;
    if (!slurp(path, text)) return cannot_read(path);
    Str out, err;
    const tpb_code code = tpb_onepar_flag(text.c_str(), path.c_str(), &out.p, &err.p);
    if (code != TPB_OK) return report(code, err);
    put(out.get());
    return 0;
}

int run_plmap_validate(const std::string& fan_path, const std::string& map_path) {
    FanPtr f;
    if (int rc = load_fan(fan_path, f)) return rc;
    MapPtr m;
    if (int rc = load_plmap(map_path, f, m)) return rc;
    Str rep, err;
    const tpb_code code = tpb_plmap_validate(f.p, m.p, &rep.p, &err.p);
    if (code == TPB_OK) {
        std::puts("valid");
        return 0;
    }
    if (code == TPB_INVALID) {
        put(rep.get());
        return 1;
    }
    return report(code, err);
}

int run_chern(const std::string& fan_path, const std::string& map_path, std::size_t generator) {
    FanPtr f;
    if (int rc = load_fan(fan_path, f)) return rc;
    MapPtr m;
    if (int rc = load_plmap(map_path, f, m)) return rc;
    Str out, err;
    const tpb_code code = tpb_chern(f.p, m.p, generator, &out.p, &err.p);
    if (code != TPB_OK) return report(code, err);
    put(out.get());
    return 0;
}

int run_psi_rays(const std::string& fan_path, const std::string& psi_path) {
    FanPtr f;
    if (int rc = load_fan(fan_path, f)) return rc;
    PsiPtr p;
    if (int rc = load_psi(psi_path, f, p)) return rc;
    Str warn, werr;
    if (tpb_psi_warnings(f.p, p.p, &warn.p, &werr.p) == TPB_OK && !warn.get().empty())
        std::fputs(warn.get().c_str(), stderr);
    Str out, err;
    const tpb_code code = tpb_psi_ray_report(f.p, p.p, &out.p, &err.p);
    if (code != TPB_OK) return report(code, err);
    put(out.get());
    return 0;
}

int run_moduli_check(const std::string& fan_path, const std::string& psi_path,
                     const std::string& cand_path, std::size_t parallel, bool witnesses) {
    FanPtr f;
    if (int rc = load_fan(fan_path, f)) return rc;
    PsiPtr p;
    if (int rc = load_psi(psi_path, f, p)) return rc;
    CandPtr c;
    if (int rc = load_candidate(cand_path, f, c)) return rc;
    Str out, err;
    const tpb_code code =
        tpb_moduli_check(f.p, p.p, c.p, parallel, witnesses ? 1 : 0, &out.p, &err.p);
    if (code == TPB_OK || code == TPB_INVALID || code == TPB_INDETERMINATE) {
        put(out.get());
        return static_cast<int>(code);
    }
    return report(code, err);
}

int run_moduli_census(const std::string& fan_path, const std::string& psi_path, std::size_t limit,
                      std::size_t parallel) {
    FanPtr f;
    if (int rc = load_fan(fan_path, f)) return rc;
    PsiPtr p;
    if (int rc = load_psi(psi_path, f, p)) return rc;
    Str out, err;
    const tpb_code code = tpb_moduli_census(f.p, p.p, limit, parallel, &out.p, &err.p);
    if (code != TPB_OK) return report(code, err);
    put(out.get());
    return 0;
}

int run_klyachko_import(const std::string& path) {
    if (path.empty()) return missing("filtration file");
    std::string text;
    if (!slurp(path, text)) return cannot_read(path);
    Str out, err;
    const tpb_code code = tpb_klyachko_import(text.c_str(), path.c_str(), &out.p, &err.p);
    if (code != TPB_OK) return report(code, err);
    put(out.get());
    return 0;
}

int run_klyachko_export(const std::string& path) {
    if (path.empty()) return missing("weighted flag file");
    std::string text;
    if (!slurp(path, text)) return cannot_read(path);
    Str out, err;
    const tpb_code code = tpb_klyachko_export(text.c_str(), path.c_str(), &out.p, &err.p);
    if (code != TPB_OK) return report(code, err);
    put(out.get());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact classification toolkit for framed toric principal bundles", "tpb"};
    app.require_subcommand(1);
    app.add_flag_callback(
           "--schema", [] { std::exit(print_schemas({""})); },
           "print every JSON input format and exit")
        ->trigger_on_parse();

    int rc = 0;
    std::string fan_path, map_path, psi_path, cand_path, in_path, a_path, b_path;
    std::size_t generator = 0;
    std::size_t parallel = 1;
    std::size_t census_limit = 100000;
    bool witnesses = true;
    bool schema = false;

    auto* fan_cmd = app.add_subcommand("fan", "fan structure checks");
    fan_cmd->require_subcommand(1);
    auto* fan_validate = fan_cmd->add_subcommand("validate", "check a fan file, echo canonical form");
    fan_validate->add_option("file", in_path, "fan JSON file");
    fan_validate->add_flag("--schema", schema, "print the fan format and exit");
    fan_validate->callback([&] { rc = schema ? print_schemas({"fan"}) : run_fan_validate(in_path); });
    auto* fan_complete = fan_cmd->add_subcommand("complete", "test whether the fan covers the lattice");
    fan_complete->add_option("file", in_path, "fan JSON file");
    fan_complete->add_flag("--schema", schema, "print the fan format and exit");
    fan_complete->callback([&] { rc = schema ? print_schemas({"fan"}) : run_fan_complete(in_path); });

    auto* onepar_cmd = app.add_subcommand("onepar", "one-parameter subgroups");
    onepar_cmd->require_subcommand(1);
    auto* onepar_equiv = onepar_cmd->add_subcommand("equiv", "decide equivalence of two subgroups");
    onepar_equiv->add_option("first", a_path, "subgroup JSON file");
    onepar_equiv->add_option("second", b_path, "subgroup JSON file");
    onepar_equiv->add_flag("--schema", schema, "print the subgroup format and exit");
    onepar_equiv->callback(
        [&] { rc = schema ? print_schemas({"onepar"}) : run_onepar_equiv(a_path, b_path); });
    auto* onepar_flag = onepar_cmd->add_subcommand("flag", "weighted flag of a subgroup");
    onepar_flag->add_option("file", in_path, "subgroup JSON file");
    onepar_flag->add_flag("--schema", schema, "print the formats involved and exit");
    onepar_flag->callback([&] {
        rc = schema ? print_schemas({"onepar", "weighted-flag"}) : run_onepar_flag(in_path);
    });

    auto* plmap_cmd = app.add_subcommand("plmap", "piecewise linear maps");
    plmap_cmd->require_subcommand(1);
    auto* plmap_validate = plmap_cmd->add_subcommand("validate", "check chart compatibility");
    plmap_validate->add_option("--fan", fan_path, "fan JSON file");
    plmap_validate->add_option("file", in_path, "map JSON file");
    plmap_validate->add_flag("--schema", schema, "print the formats involved and exit");
    plmap_validate->callback([&] {
        rc = schema ? print_schemas({"fan", "plmap"}) : run_plmap_validate(fan_path, in_path);
    });

    auto* chern_cmd = app.add_subcommand("chern", "characteristic class of a map");
    chern_cmd->add_option("--fan", fan_path, "fan JSON file");
    chern_cmd->add_option("--map", map_path, "map JSON file");
    auto* gen_opt = chern_cmd->add_option("--generator", generator, "generator index, 1 based");
    chern_cmd->add_flag("--schema", schema, "print the formats involved and exit");
    chern_cmd->callback([&] {
        if (schema) {
            rc = print_schemas({"fan", "plmap", "piecewise"});
        } else if (gen_opt->count() == 0) {
            rc = missing("--generator");
        } else {
            rc = run_chern(fan_path, map_path, generator);
        }
    });

    auto* psi_cmd = app.add_subcommand("psi", "characteristic class data");
    psi_cmd->require_subcommand(1);
    auto* psi_rays = psi_cmd->add_subcommand("rays", "dominant weights and types along each ray");
    psi_rays->add_option("--fan", fan_path, "fan JSON file");
    psi_rays->add_option("--psi", psi_path, "class JSON file");
    psi_rays->add_flag("--schema", schema, "print the formats involved and exit");
    psi_rays->callback(
        [&] { rc = schema ? print_schemas({"fan", "psi"}) : run_psi_rays(fan_path, psi_path); });

    auto* moduli_cmd = app.add_subcommand("moduli", "membership in the moduli space");
    moduli_cmd->require_subcommand(1);
    auto* moduli_check = moduli_cmd->add_subcommand("check", "decide one candidate");
    moduli_check->add_option("--fan", fan_path, "fan JSON file");
    moduli_check->add_option("--psi", psi_path, "class JSON file");
    moduli_check->add_option("--cand", cand_path, "candidate JSON file");
    moduli_check->add_option("--parallel", parallel, "worker count, output independent of it");
    moduli_check->add_flag("--witnesses,!--no-witnesses", witnesses,
                           "include adapted bases in the verdict");
    moduli_check->add_flag("--schema", schema, "print the formats involved and exit");
    moduli_check->callback([&] {
        rc = schema ? print_schemas({"fan", "psi", "candidate", "verdict"})
                    : run_moduli_check(fan_path, psi_path, cand_path, parallel, witnesses);
    });
    auto* moduli_census = moduli_cmd->add_subcommand("census", "enumerate accepted candidates");
    moduli_census->add_option("--fan", fan_path, "fan JSON file");
    moduli_census->add_option("--psi", psi_path, "class JSON file");
    moduli_census->add_option("--census-limit", census_limit, "abort beyond this many tuples");
    moduli_census->add_option("--parallel", parallel, "worker count, output independent of it");
    moduli_census->add_flag("--schema", schema, "print the formats involved and exit");
    moduli_census->callback([&] {
        rc = schema ? print_schemas({"fan", "psi", "candidate"})
                    : run_moduli_census(fan_path, psi_path, census_limit, parallel);
    });

    auto* kly_cmd = app.add_subcommand("klyachko", "filtration interchange");
    kly_cmd->require_subcommand(1);
    auto* kly_import = kly_cmd->add_subcommand("import", "filtration file to weighted flag");
    kly_import->add_option("file", in_path, "filtration JSON file");
    kly_import->add_flag("--schema", schema, "print the formats involved and exit");
    kly_import->callback([&] {
        rc = schema ? print_schemas({"filtration", "weighted-flag"}) : run_klyachko_import(in_path);
    });
    auto* kly_export = kly_cmd->add_subcommand("export", "weighted flag file to filtration");
    kly_export->add_option("file", in_path, "weighted flag JSON file");
    kly_export->add_flag("--schema", schema, "print the formats involved and exit");
    kly_export->callback([&] {
        rc = schema ? print_schemas({"weighted-flag", "filtration"}) : run_klyachko_export(in_path);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }
    return rc;
}
