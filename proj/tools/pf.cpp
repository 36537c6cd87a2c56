#include "pf/acceptance.hpp"
#include "pf/bundle.hpp"
#include "pf/error.hpp"
#include "pf/json_io.hpp"
#include "pf/numeric.hpp"
#include "pf/sp4.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace pf;
namespace fs = std::filesystem;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Prec env_prec(Prec fallback) {
    const char* s = std::getenv("PF_PREC_BITS");
    if (!s) return fallback;
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (*end || v < 64) throw UsageError("PF_PREC_BITS must be an integer >= 64");
    return static_cast<Prec>(v);
}

void check_prec(long p) {
    if (p < 64) throw UsageError("precision must be at least 64 bits");
}

void check_order(int n) {
    if (n < 10) throw UsageError("series order must be at least 10");
}

std::optional<json> read_json_file(const fs::path& p) {
    std::ifstream in(p);
    if (!in) fail(Errc::BadInput, "cannot open " + p.string());
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return json::parse(ss.str());
    } catch (const json::exception&) {
        return std::nullopt;
    }
}

std::string read_text(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// a file if it exists, else a file of that name under the data directory
std::optional<fs::path> locate(const std::string& s) {
    if (fs::exists(s)) return fs::path(s);
    fs::path d = fs::path(data_dir());
    if (fs::exists(d / s)) return d / s;
    if (fs::exists(d / (s + ".json"))) return d / (s + ".json");
    return std::nullopt;
}

// --op: bundle name or file, operator JSON, basis JSON, or operator text
Bundle load_op(const std::string& s) {
    if (auto p = locate(s)) {
        auto j = read_json_file(*p);
        if (!j) {
            Bundle b;
            b.name = p->stem().string();
            b.op = parse_operator(read_text(*p));
            return b;
        }
        if (j->is_object() && j->contains("operator") && !j->contains("solutions")) return load_bundle(p->string());
        Bundle b;
        b.name = p->stem().string();
        b.op = operator_from_json(j->is_object() && j->contains("solutions") ? j->at("operator") : *j);
        return b;
    }
    Bundle b;
    b.name = "inline";
    try {
        b.op = parse_operator(s);
    } catch (const Error& e) {
        if (e.code() != Errc::SyntaxError) throw;
        fail(Errc::BadInput, "'" + s + "' is neither a bundle, a file nor operator text (" + e.what() + ")");
    }
    return b;
}

// --basis-change: bundle name or file holding a matrix, or a bundle with "basis_change"
std::pair<ConstMatrix, std::string> load_basis_change(const std::string& s) {
    auto p = locate(s);
    if (!p) fail(Errc::BadInput, "cannot find basis change " + s);
    auto j = read_json_file(*p);
    if (!j) fail(Errc::BadInput, "basis change file is not JSON: " + p->string());
    if (j->is_object()) {
        if (!j->contains("basis_change")) fail(Errc::BadInput, "no \"basis_change\" in " + p->string());
        return {const_matrix_from_json(j->at("basis_change")), j->value("basis_label", std::string("u"))};
    }
    return {const_matrix_from_json(*j), "u"};
}

SolutionBasis make_basis(const Bundle& b, int N, const std::string& change, bool bundle_default) {
    SolutionBasis y = frobenius_basis(b.op, N);
    if (!change.empty()) {
        auto [m, label] = load_basis_change(change);
        return change_basis(y, m, label);
    }
    if (bundle_default && b.basis_change) return change_basis(y, *b.basis_change, b.basis_label);
    return y;
}

Q parse_point(const std::string& s) {
    try {
        return parse_rational(s);
    } catch (const Error&) {
        throw UsageError("point must be a rational p/q: " + s);
    }
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json vec_json(const Vec4& v) { return json::array({v[0], v[1], v[2], v[3]}); }

json xmatrix_json(const XMatrix& m) {
    json rows = json::array();
    for (const auto& r : m) {
        json row = json::array();
        for (const auto& x : r) row.push_back(x.str());
        rows.push_back(row);
    }
    return rows;
}

json log10_json(double log2v) {
    std::ostringstream os;
    os.precision(4);
    os << log2v * std::log10(2.0);
    return os.str();
}

struct StructureOut {
    TauData td;
    StructureSeries ss;
    std::optional<WronskianSet> ws;
};

StructureOut structure_for(const SolutionBasis& u, const GeometryConventions& conv) {
    StructureOut o;
    if (u.size() == 4) {
        o.ws = wronskians(u);
        o.td = tau_data(*o.ws, u);
    } else if (u.size() == 5) {
        o.td = tau_data_order5(u);
    } else {
        fail(Errc::BadInput, "invariants need an order-4 or order-5 operator");
    }
    o.ss = structure_series(o.td, conv);
    return o;
}

struct GeomArgs {
    std::string op, change, tau_scale;
    int order = kDefaultOrder, guard = kDefaultGuard, max_deg = 12, t_sign = 0;

    void add(CLI::App* c, bool need_op = true) {
        auto o = c->add_option("--op", op, "bundle name, operator file or operator text");
        if (need_op) o->required();
        c->add_option("--basis-change", change, "basis change matrix (file or bundle name)");
        c->add_option("--order", order, "series truncation order")->capture_default_str();
        c->add_option("--guard", guard, "guard terms for rational reconstruction")->capture_default_str();
        c->add_option("--max-deg", max_deg, "degree bound for rational reconstruction")->capture_default_str();
        c->add_option("--t-sign", t_sign, "sign of t (overrides the bundle)")->check(CLI::IsMember({-1, 1}));
        c->add_option("--tau-scale", tau_scale, "tau scale (overrides the bundle)");
    }
    void validate() const {
        check_order(order);
        if (guard < 3) throw UsageError("guard must be at least 3");
    }
    GeometryConventions conventions(const Bundle& b) const {
        GeometryConventions c = b.conventions;
        if (t_sign) c.t_sign = t_sign;
        if (!tau_scale.empty()) c.tau_scale = parse_point(tau_scale);
        return c;
    }
};

json p_json(const PInvariants& p) {
    return {{"p1", ratfunc_to_json(p.p1)}, {"p2", ratfunc_to_json(p.p2)}, {"p3", ratfunc_to_json(p.p3)}};
}

PInvariants invariants_of(const GeomArgs& a, Bundle& b) {
    SolutionBasis u = make_basis(b, a.order, a.change, true);
    auto so = structure_for(u, a.conventions(b));
    return p_invariants(so.ss, a.max_deg, a.guard);
}

int run(int argc, char** argv) {
    CLI::App app{"Picard-Fuchs operators with Sp4 monodromy"};
    app.require_subcommand(1);

    GeomArgs frob_a;
    auto* frob = app.add_subcommand("frobenius", "Frobenius basis at 0 as JSON series");
    frob_a.add(frob);

    std::string sq_op;
    std::string gauge = "0";
    auto* extsq = app.add_subcommand("extsq", "exterior square of an order-4 operator");
    extsq->add_option("--op", sq_op)->required();
    extsq->add_option("--gauge", gauge, "conjugate by z^k")->capture_default_str();
    auto* symsq = app.add_subcommand("symsq", "symmetric square of an order-4 operator");
    symsq->add_option("--op", sq_op)->required();
    symsq->add_option("--gauge", gauge, "conjugate by z^k")->capture_default_str();

    GeomArgs inv_a;
    auto* inv = app.add_subcommand("invariants", "mirror map, Yukawa coupling, G series and p1, p2, p3");
    inv_a.add(inv);
    GeomArgs o5_a;
    auto* order5 = app.add_subcommand("order5", "order-5 operator built from p1, p2, p3");
    o5_a.add(order5);
    GeomArgs pb_a;
    auto* pullback = app.add_subcommand("pullback", "order-4 pullback built from p1, p2, p3");
    pb_a.add(pullback);

    std::string mono_op, mono_basis, mono_change, around;
    std::string mono_ring = "rational";
    int mono_order = 90;
    long mono_prec = 0;
    auto* mono = app.add_subcommand("monodromy", "numerical monodromy around a singular point");
    mono->add_option("--op", mono_op, "bundle or operator (its basis change is applied)");
    mono->add_option("--basis", mono_basis, "basis JSON as written by frobenius");
    mono->add_option("--basis-change", mono_change, "basis change applied to the Frobenius basis of --op");
    mono->add_option("--around", around, "singular point p/q")->required();
    mono->add_option("--prec", mono_prec, "working precision in bits");
    mono->add_option("--order", mono_order, "series order of the basis")->capture_default_str();
    mono->add_option("--ring", mono_ring, "recognition ring")->check(CLI::IsMember({"rational", "x", "none"}));

    std::string gcase = "a", gbranch = "upper", gz;
    long gprec = 0;
    int gorder = 130;
    auto* guil = app.add_subcommand("guillera", "Guillera relations on the binomial5 w-basis");
    guil->add_option("--case", gcase)->check(CLI::IsMember({"a", "b", "other"}))->capture_default_str();
    guil->add_option("--prec", gprec, "working precision in bits");
    guil->add_option("--order", gorder, "series order")->capture_default_str();
    guil->add_option("--branch", gbranch)->check(CLI::IsMember({"principal", "upper", "lower"}))->capture_default_str();
    guil->add_option("--z", gz, "evaluation point p/q (defaults per case)");

    std::string sid = "jga";
    int sterms = 50;
    long sprec = 0;
    auto* sums = app.add_subcommand("sums", "1/pi^2 and 1/pi series");
    sums->add_option("--id", sid)->check(CLI::IsMember({"jga", "jgb", "jgb13", "ram1103"}))->capture_default_str();
    sums->add_option("--terms", sterms)->check(CLI::Range(1, 100000))->capture_default_str();
    sums->add_option("--prec", sprec, "working precision in bits");

    int ktrials = 1000;
    long kprec = 0;
    std::uint64_t kseed = 42;
    auto* klemm = app.add_subcommand("klemm", "random transformation trials of the Siegel embedding");
    klemm->add_option("--trials", ktrials)->check(CLI::Range(1, 10000000))->capture_default_str();
    klemm->add_option("--prec", kprec, "working precision in bits");
    klemm->add_option("--seed", kseed)->capture_default_str();

    auto* sp4 = app.add_subcommand("sp4", "Sp4(Z) orbit reduction");
    sp4->require_subcommand(1);
    std::vector<long long> rv;
    auto* red = sp4->add_subcommand("reduce", "reduce a primitive vector");
    red->add_option("v", rv, "a b c d")->required()->expected(4);
    int pmax = 20, qmax = 20;
    bool wjson = false;
    auto* wit = sp4->add_subcommand("witness", "classes of the witness vectors (p,-1,0,q)");
    wit->add_option("--pmax", pmax)->capture_default_str();
    wit->add_option("--qmax", qmax)->capture_default_str();
    wit->add_flag("--json", wjson, "JSON output");

    std::vector<int> only;
    bool vjson = false;
    auto* verify = app.add_subcommand("verify-all", "run every acceptance criterion");
    verify->add_option("--only", only, "criteria to run")->delimiter(',');
    verify->add_flag("--json", vjson, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (frob->parsed()) {
        frob_a.validate();
        Bundle b = load_op(frob_a.op);
        emit(basis_to_json(make_basis(b, frob_a.order, frob_a.change, false)));
    } else if (extsq->parsed() || symsq->parsed()) {
        Bundle b = load_op(sq_op);
        ThetaOperator w = extsq->parsed() ? exterior_square(b.op) : symmetric_square(b.op);
        Q k = parse_point(gauge);
        if (k != 0) w = gauge_transform(w, k);
        json j = operator_to_json(w);
        j["gauge"] = to_string(k);
        emit(j);
    } else if (inv->parsed()) {
        inv_a.validate();
        Bundle b = load_op(inv_a.op);
        SolutionBasis u = make_basis(b, inv_a.order, inv_a.change, true);
        auto so = structure_for(u, inv_a.conventions(b));
        PInvariants p = p_invariants(so.ss, inv_a.max_deg, inv_a.guard);
        json j;
        j["operator"] = operator_to_json(b.op);
        j["order"] = inv_a.order;
        if (so.ws) j["w01"] = logseries_to_json((*so.ws)(0, 1));
        j["tau1"] = logseries_to_json(so.td.tau1);
        j["tau2"] = logseries_to_json(so.td.tau2);
        j["tau3"] = logseries_to_json(so.td.tau3);
        j["t"] = logseries_to_json(so.td.t);
        j["v"] = logseries_to_json(so.ss.v);
        j["K"] = logseries_to_json(so.ss.K);
        j["G1"] = logseries_to_json(so.ss.G1);
        j["G2"] = logseries_to_json(so.ss.G2);
        j["G3"] = logseries_to_json(so.ss.G3);
        j.update(p_json(p));
        emit(j);
    } else if (order5->parsed()) {
        o5_a.validate();
        Bundle b = load_op(o5_a.op);
        emit(operator_to_json(build_order5(invariants_of(o5_a, b))));
    } else if (pullback->parsed()) {
        pb_a.validate();
        Bundle b = load_op(pb_a.op);
        Pullback pb = build_order4_pullback(invariants_of(pb_a, b), pb_a.order);
        json j = operator_to_json(pb.op);
        j["g"] = series_to_json(pb.g);
        j["z_exponent"] = to_string(pb.z_exponent);
        if (pb.radical) {
            json r = json::array();
            for (const auto& f : *pb.radical)
                r.push_back({{"base", polynomial_to_json(f.base)}, {"exponent", to_string(f.exponent)}});
            j["g_radical"] = r;
        } else {
            j["g_radical"] = nullptr;
        }
        emit(j);
    } else if (mono->parsed()) {
        check_order(mono_order);
        if (mono_prec) check_prec(mono_prec);
        Prec prec = mono_prec ? static_cast<Prec>(mono_prec) : env_prec(kDefaultPrec);
        SolutionBasis basis;
        if (!mono_basis.empty()) {
            auto p = locate(mono_basis);
            if (!p) fail(Errc::BadInput, "cannot find basis " + mono_basis);
            auto j = read_json_file(*p);
            if (!j) fail(Errc::BadInput, "basis file is not JSON");
            basis = basis_from_json(*j);
        } else if (!mono_op.empty()) {
            basis = make_basis(load_op(mono_op), mono_order, mono_change, true);
        } else {
            throw UsageError("monodromy needs --op or --basis");
        }
        ContinuationOptions opt;
        opt.prec = prec;
        NumericConstants nc(prec);
        MonodromyResult r = monodromy_around(basis, Complex(parse_point(around), 0, prec), opt);
        CMatrix Md = reversed(r.M);
        json j;
        j["around"] = around;
        j["basis"] = basis.label;
        j["prec"] = prec;
        j["basepoint"] = complex_to_json(r.basepoint);
        j["loop"] = r.loop.description;
        j["order"] = "descending";
        j["M"] = cmatrix_to_json(Md);
        j["error_log10"] = log10_json(r.error_log2);
        if (mono_ring != "none") {
            double tol = -std::max(40.0, prec / 3.0);
            Recognition rec =
                recognize_exact(Md, mono_ring == "x" ? Ring::RationalX : Ring::Rational, tol, nc);
            j["exact"] = xmatrix_json(rec.M);
            j["residual_log10"] = log10_json(rec.residual_log2);
            j["symplectic"] = rec.symplectic_checked ? json(rec.symplectic) : json(nullptr);
        }
        emit(j);
    } else if (guil->parsed()) {
        check_order(gorder);
        if (gprec) check_prec(gprec);
        Prec prec = gprec ? static_cast<Prec>(gprec) : env_prec(kDefaultPrec);
        GuilleraCase c = gcase == "a" ? GuilleraCase::A : gcase == "b" ? GuilleraCase::B : GuilleraCase::Other;
        Q z = !gz.empty() ? parse_point(gz) : c == GuilleraCase::B ? Q(-1, 1 << 20) : c == GuilleraCase::A ? Q(-1, 4096) : Q(-1, 10000);
        Branch br = gbranch == "upper" ? Branch::Upper : gbranch == "lower" ? Branch::Lower : Branch::Principal;
        SolutionBasis w = bundle_basis(load_bundle("binomial5"), gorder);
        GuilleraReport g = guillera_check(w, c, Complex(z, 0, prec), prec, br);
        json j;
        j["case"] = gcase;
        j["z"] = to_string(z);
        j["branch"] = gbranch;
        j["prec"] = prec;
        j["tau1"] = complex_to_json(g.tau1);
        j["tau2"] = complex_to_json(g.tau2);
        j["tau3"] = complex_to_json(g.tau3);
        j["dtau2_dtau1"] = complex_to_json(g.dtau2);
        j["linear_a"] = complex_to_json(g.linear_a);
        j["linear_b"] = complex_to_json(g.linear_b);
        j["slope"] = complex_to_json(g.slope);
        if (c != GuilleraCase::Other) {
            j["residual_linear"] = real_to_json(g.residual_linear);
            j["residual_slope"] = real_to_json(g.residual_slope);
        }
        json nh = json::array();
        for (const auto& x : g.nonholomorphic) nh.push_back(real_to_json(x));
        j["nonholomorphic_residuals"] = nh;
        j["tail_log10"] = log10_json(g.tail_log2);
        emit(j);
    } else if (sums->parsed()) {
        if (sprec) check_prec(sprec);
        Prec prec = sprec ? static_cast<Prec>(sprec) : env_prec(256);
        SumId id = sid == "jga" ? SumId::JGa : sid == "jgb" ? SumId::JGb : sid == "jgb13" ? SumId::JGb13 : SumId::Ramanujan1103;
        SumReport r = sum_identity(id, sterms, prec);
        emit({{"id", sid}, {"terms", r.terms}, {"prec", prec}, {"value", r.value.str(40)}, {"expected", r.expected.str(40)},
              {"residual", real_to_json(r.residual)}, {"tail_bound", real_to_json(r.tail_bound)}});
    } else if (klemm->parsed()) {
        if (kprec) check_prec(kprec);
        Prec prec = kprec ? static_cast<Prec>(kprec) : env_prec(128);
        KlemmTrials t = klemm_random_trials(ktrials, prec, kseed);
        emit({{"trials", t.trials}, {"failures", t.failures}, {"seed", kseed}, {"prec", prec},
              {"max_residual", real_to_json(t.max_residual)}});
    } else if (red->parsed()) {
        Vec4 v{rv[0], rv[1], rv[2], rv[3]};
        Reduction r = reduce(v);
        emit({{"input", vec_json(v)}, {"reduced", vec_json(r.r)}, {"text", to_string(r.r)}, {"passes", r.passes},
              {"is_reduced", is_reduced(r.r)}});
    } else if (wit->parsed()) {
        WitnessCensus w = witness_census(pmax, qmax);
        if (wjson) {
            json reps = json::array();
            for (const auto& v : w.representatives) reps.push_back(vec_json(v));
            emit({{"pmax", pmax}, {"qmax", qmax}, {"vectors", w.vectors}, {"classes", w.classes},
                  {"all_singletons", w.all_singletons}, {"representatives", reps}});
        } else {
            std::cout << w.vectors << " vectors, " << w.classes << " classes"
                      << (w.all_singletons ? ", all singletons" : "") << "\n";
            for (const auto& v : w.representatives) std::cout << to_string(v) << "\n";
        }
    } else if (verify->parsed()) {
        bool ok = true;
        json arr = json::array();
        run_acceptance(only, [&](const CriterionResult& r) {
            ok = ok && r.pass;
            if (vjson)
                arr.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
            else
                std::cout << format_line(r) << std::endl;
        });
        if (vjson) emit(arr);
        return ok ? 0 : 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::string msg = e.what();
        std::string prefix = std::string(errc_name(e.code())) + ": ";
        if (msg.rfind(prefix, 0) == 0) msg = msg.substr(prefix.size());
        std::cout << json{{"error", errc_name(e.code())}, {"message", msg}}.dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cout << json{{"error", "Internal"}, {"message", e.what()}}.dump(2) << "\n";
        return 1;
    }
}
