#include "balcone/cli.hpp"

#include "balcone/svg.hpp"

#include <algorithm>

namespace balcone {

const std::vector<std::string> &commands() {
    static const std::vector<std::string> names = {
        "intersect", "pairing", "dual",   "image", "balanced",
        "gap",       "bound",   "render", "demo"};
    return names;
}

int exit_code_for(const std::exception &e) {
    if (dynamic_cast<const UsageError *>(&e))
        return kExitUsage;
    if (dynamic_cast<const ValidationError *>(&e))
        return kExitValidation;
    return kExitComputation;
}

namespace {

void merge_into(ordered_json &dst, const ordered_json &src) {
    for (auto it = src.begin(); it != src.end(); ++it)
        dst[it.key()] = it.value();
}

std::string pair_text(const Vec2 &v) {
    return "(" + to_string(v.x) + ", " + to_string(v.y) + ")";
}

ordered_json vec_json(const Vec2 &v) {
    return ordered_json::array({to_string(v.x), to_string(v.y)});
}

ordered_json labels_json(const Scenario &s) {
    return {{"h11", h11_labels(s)}, {"codim", codim_labels(s)}};
}

std::string cone_text(const Cone2D &c, const std::vector<std::string> &names) {
    return to_string(c) + "  [" + format_ray(c.r1(), names) + ", " +
           format_ray(c.r2(), names) + "]";
}

ordered_json ray_labels(const Cone2D &c, const std::vector<std::string> &names) {
    return ordered_json::array({format_ray(c.r1(), names),
                                format_ray(c.r2(), names)});
}

void expect_args(const RunOptions &o, std::size_t lo, std::size_t hi,
                 const std::string &usage) {
    if (o.args.size() < lo || o.args.size() > hi)
        throw UsageError("usage: " + usage);
}

const BasisElement &lookup(const Scenario &s, const std::string &name) {
    const BasisElement *b = s.find(name);
    if (!b)
        throw UsageError("unknown basis name '" + name + "'");
    return *b;
}

const PrimeDivisor &lookup_prime(const Scenario &s, const std::string &name) {
    for (const auto &p : s.prime_divisors)
        if (p.name == name)
            return p;
    throw UsageError("unknown prime divisor '" + name + "'");
}

Rational arg_rational(const std::string &text) {
    try {
        return parse_rational(text);
    } catch (const ValidationError &) {
        throw UsageError("expected a rational number, got '" + text + "'");
    }
}

// Every multiset of h11 elements of size dim, in non-decreasing index order.
std::vector<std::vector<int>> top_products(int basis_size, int dim) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(dim, 0);
    for (;;) {
        out.push_back(cur);
        int i = dim - 1;
        while (i >= 0 && cur[i] == basis_size - 1)
            --i;
        if (i < 0)
            return out;
        ++cur[i];
        std::fill(cur.begin() + i + 1, cur.end(), cur[i]);
    }
}

Report intersect(const Scenario &s, const RunOptions &o) {
    if (o.args.empty())
        throw UsageError("usage: intersect NAME...");
    std::vector<CohomClass> factors;
    ordered_json names = ordered_json::array();
    for (const auto &a : o.args) {
        const BasisElement &b = lookup(s, a);
        factors.push_back(b.cls);
        names.push_back(b.name);
    }
    Rational v = intersection_number(s.ci, factors);
    Report r;
    r.machine = {{"command", "intersect"}, {"factors", names},
                 {"value", to_string(v)}};
    r.text = to_string(v) + "\n";
    return r;
}

Report pairing(const Scenario &s, const RunOptions &o) {
    expect_args(o, 0, 0, "pairing");
    PairingMatrix pm = s.pairing();
    Report r;
    r.machine = {{"command", "pairing"}};
    r.machine["pairing"] = pairing_to_json(s, pm);
    TextTable t(o.color);
    t.heading("pairing  (rows: h11 basis, columns: codim basis)");
    for (std::size_t i = 0; i < pm.entries.rows(); ++i) {
        std::string row;
        for (std::size_t j = 0; j < pm.entries.cols(); ++j)
            row += (j ? "  " : "") + to_string(pm.entries(i, j));
        t.row(s.h11_basis[i].display(), row);
    }
    t.row("determinant", to_string(pm.entries.determinant()));
    r.text = t.str();
    return r;
}

Report dual(const Scenario &s, const RunOptions &o) {
    expect_args(o, 0, 1, "dual [effective|kahler]");
    std::string which = o.args.empty() ? "effective" : o.args[0];
    if (which != "effective" && which != "kahler")
        throw UsageError("dual: expected 'effective' or 'kahler', got '" +
                         which + "'");
    const Cone2D &source = which == "kahler" ? s.kahler_cone : s.effective_cone;
    Cone2D d = dual_cone(source, Pairing(s.pairing().entries));
    Report r;
    r.machine = {{"command", "dual"},
                 {"of", which},
                 {"source", cone_to_json(source)},
                 {"dual", cone_to_json(d)},
                 {"dual_rays", ray_labels(d, codim_labels(s))}};
    TextTable t(o.color);
    t.heading("dual of the " + which + " cone");
    t.row("source", cone_text(source, h11_labels(s)));
    t.row("dual", cone_text(d, codim_labels(s)));
    r.text = t.str();
    return r;
}

Report image(const Scenario &s, const RunOptions &o) {
    expect_args(o, 0, 0, "image");
    Cone2D c = balanced_image_closure(s);
    Report r;
    r.machine = {{"command", "image"},
                 {"kahler_cone", cone_to_json(s.kahler_cone)},
                 {"image_closure", cone_to_json(c)},
                 {"image_rays", ray_labels(c, codim_labels(s))}};
    TextTable t(o.color);
    t.heading("closure of the balanced-map image of the Kähler cone");
    t.row("kahler cone", cone_text(s.kahler_cone, h11_labels(s)));
    t.row("image closure", cone_text(c, codim_labels(s)));
    r.text = t.str();
    return r;
}

Report balanced(const Scenario &s, const RunOptions &o) {
    expect_args(o, 0, 0, "balanced");
    Cone2D c = balanced_cone(s);
    Report r;
    r.machine = {{"command", "balanced"},
                 {"effective_cone", cone_to_json(s.effective_cone)},
                 {"balanced_cone", cone_to_json(c)},
                 {"balanced_rays", ray_labels(c, codim_labels(s))}};
    TextTable t(o.color);
    t.heading("balanced cone closure (dual of the effective cone)");
    t.row("effective cone", cone_text(s.effective_cone, h11_labels(s)));
    t.row("balanced cone", cone_text(c, codim_labels(s)));
    r.text = t.str();
    return r;
}

void add_gap_rows(TextTable &t, const Scenario &s, const GapReport &g) {
    const auto names = codim_labels(s);
    t.row("image closure", cone_text(g.image_closure, names));
    t.row("balanced cone", cone_text(g.balanced_cone, names));
    t.row("included", g.inclusion.included ? "yes" : "no");
    t.row("strict", g.inclusion.strict ? "yes" : "no");
    for (const auto &w : g.gaps)
        t.row("gap", format_ray(w.from, names) + " .. " +
                         format_ray(w.to, names) + "  witness " +
                         to_string(w.witness) + " = " +
                         format_ray(w.witness, names));
}

ordered_json gap_machine(const Scenario &s, const GapReport &g) {
    ordered_json j = {{"kahler_cone", cone_to_json(s.kahler_cone)},
                      {"effective_cone", cone_to_json(s.effective_cone)}};
    merge_into(j, gap_report_to_json(g));
    j["balanced_rays"] = ray_labels(g.balanced_cone, codim_labels(s));
    j["labels"] = labels_json(s);
    return j;
}

Report gap(const Scenario &s, const RunOptions &o) {
    expect_args(o, 0, 0, "gap");
    GapReport g = gap_report(s);
    Report r;
    r.machine = {{"command", "gap"}};
    merge_into(r.machine, gap_machine(s, g));
    TextTable t(o.color);
    t.heading("balanced-map image versus balanced cone");
    add_gap_rows(t, s, g);
    r.text = t.str();
    return r;
}

Report bound(const Scenario &s, const RunOptions &o) {
    expect_args(o, 3, 3, "bound PRIME C1 C2");
    const PrimeDivisor &p = lookup_prime(s, o.args[0]);
    Vec2 ample{arg_rational(o.args[1]), arg_rational(o.args[2])};
    Vec2 l = divisor_bound_functional(s, p.coords, ample);
    Report r;
    r.machine = {{"command", "bound"},
                 {"prime", p.name},
                 {"prime_class", vec_json(p.coords)},
                 {"ample", vec_json(ample)},
                 {"functional", vec_json(l)}};
    const auto names = h11_labels(s);
    TextTable t(o.color);
    t.heading("bound functional of " + p.name);
    t.row("prime class", pair_text(p.coords));
    t.row("ample class", pair_text(ample));
    t.row("functional", pair_text(l));
    t.row("bound", to_string(l.x) + "*a1 + " + to_string(l.y) +
                       "*a2 >= 0 for every other prime a1*" + names[0] +
                       " + a2*" + names[1]);
    r.text = t.str();
    return r;
}

Report demo(const Scenario &s, const RunOptions &o) {
    expect_args(o, 0, 0, "demo");
    const int dim = s.ci.dim();
    Report r;
    r.machine = {{"command", "demo"}, {"dim", dim}, {"labels", labels_json(s)}};
    TextTable t(o.color);
    t.heading("complete intersection");
    t.row("dimension", std::to_string(dim));
    const std::vector<std::string> gen_names = [&] {
        std::vector<std::string> n;
        for (int i = 0; i < s.ci.space().factors(); ++i)
            n.push_back("h" + std::to_string(i));
        return n;
    }();
    t.row("fundamental class", format_class(s.ci.fundamental_class(), gen_names));

    t.heading("intersection numbers");
    ordered_json numbers = ordered_json::array();
    for (const auto &combo : top_products(2, dim)) {
        std::vector<CohomClass> f;
        ordered_json names = ordered_json::array();
        std::string key;
        for (int i : combo) {
            f.push_back(s.h11_basis[i].cls);
            names.push_back(s.h11_basis[i].name);
            key += (key.empty() ? "" : "·") + s.h11_basis[i].display();
        }
        Rational v = intersection_number(s.ci, f);
        numbers.push_back({{"factors", names}, {"value", to_string(v)}});
        t.row("∫ " + key, to_string(v));
    }
    r.machine["intersection_numbers"] = numbers;

    PairingMatrix pm = s.pairing();
    r.machine["pairing"] = pairing_to_json(s, pm);
    t.heading("pairing");
    for (std::size_t i = 0; i < 2; ++i)
        t.row(s.h11_basis[i].display(), to_string(pm.entries(i, 0)) + "  " +
                                            to_string(pm.entries(i, 1)));
    t.row("determinant", to_string(pm.entries.determinant()));

    GapReport g = gap_report(s);
    merge_into(r.machine, gap_machine(s, g));
    t.heading("cones");
    t.row("kahler cone", cone_text(s.kahler_cone, h11_labels(s)));
    t.row("effective cone", cone_text(s.effective_cone, h11_labels(s)));
    add_gap_rows(t, s, g);

    if (!s.prime_divisors.empty()) {
        const PrimeDivisor &p = s.prime_divisors.front();
        Vec2 l = divisor_bound_functional(s, p.coords, o.ample);
        r.machine["bound"] = {{"prime", p.name},
                              {"ample", vec_json(o.ample)},
                              {"functional", vec_json(l)}};
        CertificateCheck cert = check_certificate(s, o.ample);
        ordered_json entries = ordered_json::array();
        t.heading("prime divisor certificate, ample " + pair_text(o.ample));
        for (const auto &e : cert.entries) {
            entries.push_back({{"prime", e.prime},
                               {"functional", vec_json(e.functional)},
                               {"in_effective_cone", e.in_effective_cone},
                               {"bound_holds", e.bound_holds}});
            t.row(e.prime, "functional " + pair_text(e.functional) +
                               (e.in_effective_cone ? ", in E" : ", NOT in E") +
                               (e.bound_holds ? ", bound holds" : ", bound FAILS"));
        }
        r.machine["certificate"] = {{"ok", cert.ok()}, {"entries", entries}};
    }
    const auto bal = ray_labels(g.balanced_cone, codim_labels(s));
    t.heading("balanced cone bounded by " + bal[0].get<std::string>() + " and " +
              bal[1].get<std::string>());
    r.text = t.str();
    return r;
}

Report render(const Scenario &s, const RunOptions &o) {
    expect_args(o, 0, 0, "render");
    Report r;
    if (o.report) {
        r.machine = *o.report;
    } else {
        r.machine = {{"command", "gap"}};
        merge_into(r.machine, gap_machine(s, gap_report(s)));
    }
    r.svg = render_svg(r.machine);
    r.text = *r.svg;
    return r;
}

} // namespace

Report run(const std::string &command, const Scenario &scenario,
           const RunOptions &options) {
    if (command == "intersect")
        return intersect(scenario, options);
    if (command == "pairing")
        return pairing(scenario, options);
    if (command == "dual")
        return dual(scenario, options);
    if (command == "image")
        return image(scenario, options);
    if (command == "balanced")
        return balanced(scenario, options);
    if (command == "gap")
        return gap(scenario, options);
    if (command == "bound")
        return bound(scenario, options);
    if (command == "render")
        return render(scenario, options);
    if (command == "demo")
        return demo(scenario, options);
    throw UsageError("unknown command '" + command + "'");
}

} // namespace balcone
