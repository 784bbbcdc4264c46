#include "towerlab/scenario/builtin.hpp"

#include <functional>
#include <set>

namespace towerlab::scenario {

namespace {

// ---- document assembly --------------------------------------------------------

struct Doc {
    json j;
    std::set<std::string> fragments;

    Doc(const std::string& name, const std::string& description) {
        j = {{"scenario", name},
             {"description", description},
             {"n_policy", "any"},
             {"spaces", json::array()},
             {"bundles", json::array()},
             {"divisors", json::array()},
             {"maps", json::array()},
             {"curves", json::array()},
             {"chains", json::array()},
             {"models", json::array()},
             {"preflight", json::array()},
             {"notes", json::array()},
             {"expect", json::array()}};
    }

    // Runs a fragment once per document.
    bool once(const std::string& tag) { return fragments.insert(tag).second; }

    void add(const char* section, json entry) { j[section].push_back(std::move(entry)); }
    void note(const std::string& text) { j["notes"].push_back(text); }

    void expect(const std::string& check, json compute, json value, const char* provenance, const std::string& anchor) {
        j["expect"].push_back({{"check", check},
                               {"compute", std::move(compute)},
                               {"value", std::move(value)},
                               {"provenance", provenance},
                               {"anchor", anchor}});
    }

    void preflight(const std::string& check, json compute, json value) {
        j["preflight"].push_back({{"check", check}, {"compute", std::move(compute)}, {"value", std::move(value)}});
    }

    json finish() {
        for (const char* k : {"divisors", "chains", "models", "preflight", "notes"})
            if (j[k].empty()) j.erase(k);
        return j;
    }
};

std::string at(const std::string& g, const std::string& s) { return g + "@" + s; }

json coords(const std::string& s, json v) { return {{"op", "coords"}, {"space", s}, {"coords", std::move(v)}}; }
json fiber_line(const std::string& s, const std::string& g) { return {{"kind", "fiber_line"}, {"space", s}, {"gen", g}}; }
json tower_map(const std::string& from, const std::string& to) { return {{"kind", "tower"}, {"from", from}, {"to", to}}; }
json proj(const std::string& id, json bundle, const std::string& gen) {
    return {{"id", id}, {"kind", "proj_bundle"}, {"bundle", std::move(bundle)}, {"gen", gen}};
}
json trivial(const std::string& s, json rank) { return {{"op", "trivial"}, {"space", s}, {"rank", std::move(rank)}}; }
json pairing(json curve, json divisor) { return {{"op", "intersect"}, {"curve", std::move(curve)}, {"divisor", std::move(divisor)}}; }

const std::vector<std::string> kJzCurves = {"eps1_hat", "eps2_hat", "sigma_hat", "gamma_hat"};

json jz_gens() { return json::array({at("x1", "JhatZ"), at("x2", "JhatZ"), at("x3", "JhatZ"), at("x4", "JhatZ")}); }

// ---- fragments ------------------------------------------------------------------

void add_point(Doc& d) {
    if (!d.once("point")) return;
    d.add("spaces", {{"id", "pt"}, {"kind", "formal_base"}, {"pic", json::array()}, {"dim", 0}, {"canonical", json::array()}});
}

// P(T) with T trivial of rank 2n, the rank 2n-2 bundle L^perp/L, and the
// two copies of its projectivization glued along the incidence divisor.
void add_jz(Doc& d) {
    if (!d.once("jz")) return;
    add_point(d);
    d.add("spaces", proj("PT", trivial("pt", "2n"), "x1"));
    d.add("bundles", {{"id", "L"}, {"op", "taut_sub"}, {"space", "PT"}});
    d.add("bundles", {{"id", "Lperp"},
                      {"op", "kernel"},
                      {"total", {{"op", "pull"}, {"of", trivial("pt", "2n")}, {"to", "PT"}}},
                      {"quot", {{"op", "dual"}, {"of", "L"}}}});
    d.add("bundles", {{"id", "Q"}, {"op", "quotient"}, {"total", "Lperp"}, {"sub", "L"}});
    d.add("spaces", proj("P1", "Q", "x2"));
    d.add("spaces", proj("P2", "Q", "x3"));
    d.add("spaces", {{"id", "FP"}, {"kind", "fiber_product"}, {"left", "P1"}, {"right", "P2"}, {"over", "PT"}});
    d.add("spaces", {{"id", "JZ"},
                     {"kind", "divisor_in"},
                     {"divisor", {{"op", "sum"}, {"terms", {{1, at("x2", "FP")}, {1, at("x3", "FP")}}}}}});
    d.add("maps", {{"id", "JZ_to_P1"},
                   {"kind", "compose"},
                   {"maps", {{{"kind", "inverse"}, {"of", tower_map("FP", "JZ")}},
                             {{"kind", "diagonal_restriction"}, {"space", "FP"}}}}});
}

// Grassmannian side: A of rank 2 over G2, P(A), and the exceptional
// divisors over it.
void add_ez(Doc& d) {
    if (!d.once("ez")) return;
    add_jz(d);
    d.add("spaces", {{"id", "G2"}, {"kind", "formal_base"}, {"pic", {"a"}}, {"dim", "4n-5"}});
    d.add("bundles", {{"id", "A"}, {"op", "formal"}, {"space", "G2"}, {"rank", 2}, {"c1", coords("G2", {-1})}});
    d.add("spaces", proj("P_A", "A", "t"));
    d.add("bundles", {{"id", "Aperp"},
                      {"op", "kernel"},
                      {"total", trivial("G2", "2n")},
                      {"quot", {{"op", "dual"}, {"of", "A"}}}});
    d.add("bundles", {{"id", "AperpA"}, {"op", "quotient"}, {"total", "Aperp"}, {"sub", "A"}});
    d.add("bundles", {{"id", "G"},
                      {"op", "extension"},
                      {"sub", {{"op", "tensor_line"}, {"of", "AperpA"}, {"line", at("a", "G2")}}},
                      {"quot", trivial("G2", 1)}});
    d.add("spaces", proj("P_G", "G", "s"));
    d.add("spaces", proj("P_U", "AperpA", "u"));
    d.add("spaces", {{"id", "EZ"}, {"kind", "fiber_product"}, {"left", "P_A"}, {"right", "P_G"}, {"over", "G2"}});
    d.add("spaces", {{"id", "EJ"}, {"kind", "fiber_product"}, {"left", "P_A"}, {"right", "P_U"}, {"over", "G2"}});
    d.add("maps", {{"id", "Lambda"},
                   {"kind", "columns"},
                   {"source", "P1"},
                   {"target", "P_A"},
                   {"identification", true},
                   {"columns",
                    {at("t", "P_A"),
                     {{"op", "c1"},
                      {"bundle",
                       {{"op", "dual"},
                        {"of",
                         {{"op", "quotient"},
                          {"total", {{"op", "pull"}, {"of", "A"}, {"to", "P_A"}}},
                          {"sub", {{"op", "taut_sub"}, {"space", "P_A"}}}}}}}}}}});
    d.add("maps", {{"id", "EZ_to_EJ"},
                   {"kind", "columns"},
                   {"source", "EZ"},
                   {"target", "EJ"},
                   {"columns",
                    {at("a", "EJ"), at("t", "EJ"),
                     {{"op", "sum"}, {"terms", {{1, at("u", "EJ")}, {-1, at("a", "EJ")}}}}}}});
    d.add("maps", {{"id", "center_JZ"},
                   {"kind", "compose"},
                   {"maps", {"JZ_to_P1", "Lambda", tower_map("P_A", "EJ")}}});
    d.note("The center of the blow-up of JZ is the diagonal of FP, identified with P(A) through Lambda; "
           "its normal directions are parametrized by P(A^perp/A), so the exceptional divisor is EJ.");
}

// The blow-up of JZ along the diagonal and its four curve classes.
void add_jhatz(Doc& d) {
    if (!d.once("jhatz")) return;
    add_ez(d);
    d.add("spaces", {{"id", "JhatZ"},
                     {"kind", "blow_up"},
                     {"ambient", "JZ"},
                     {"codim", "2n-4"},
                     {"gen", "x4"},
                     {"sign", 1},
                     {"exceptional",
                      {{"space", "EJ"},
                       {"restriction", "center_JZ"},
                       {"self_class",
                        {{"op", "pullback"},
                         {"map", "EZ_to_EJ"},
                         {"of", {{"op", "sum"}, {"terms", {{-1, at("t", "EZ")}, {-1, at("s", "EZ")}}}}}}}}}});
    d.add("curves", {{"id", "eps1_hat"}, {"kind", "strict_transform"}, {"space", "JhatZ"}, {"ambient", fiber_line("JZ", "x2")}, {"mult", 1}});
    d.add("curves", {{"id", "eps2_hat"}, {"kind", "strict_transform"}, {"space", "JhatZ"}, {"ambient", fiber_line("JZ", "x3")}, {"mult", 1}});
    d.add("curves", {{"id", "sigma_hat"}, {"kind", "exceptional_line"}, {"space", "JhatZ"}, {"direction", "t"}});
    d.add("curves", {{"id", "gamma_hat"}, {"kind", "exceptional_line"}, {"space", "JhatZ"}, {"direction", "u"}});
    d.preflight("center codimension", {{"op", "codim"}, {"sub", "P_A"}, {"ambient", "JZ"}}, "2n-4");
    d.preflight("normal directions", {{"op", "bundle_rank"}, {"of", "G"}}, "2n-3");
    d.preflight("dim JZ", {{"op", "dim"}, {"space", "JZ"}}, "6n-8");
    d.preflight("exceptional divisor dim", {{"op", "dim"}, {"space", "EJ"}}, "6n-9");
}

// P(B) over the Grassmannian G3 of isotropic 3-planes and the fiber square of
// P(T_chi) over it, with basis (g, h, k10, k01).
void add_k2(Doc& d) {
    if (!d.once("k2")) return;
    d.add("spaces", {{"id", "G3"}, {"kind", "formal_base"}, {"pic", {"g"}}, {"dim", "8n-12"}});
    d.add("bundles", {{"id", "B"}, {"op", "formal"}, {"space", "G3"}, {"rank", 3}, {"c1", coords("G3", {-1})}});
    d.add("spaces", proj("Pb", "B", "h"));
    d.add("bundles", {{"id", "Tchi"}, {"op", "relative_tangent"}, {"space", "Pb"}});
    d.add("spaces", proj("Pk1", "Tchi", "k10"));
    d.add("spaces", proj("Pk2", "Tchi", "k01"));
    d.add("spaces", {{"id", "K2"}, {"kind", "fiber_product"}, {"left", "Pk1"}, {"right", "Pk2"}, {"over", "Pb"}});
}

// The global blow-up with basis (x1, r10, r01, mE), mE the ideal of the exceptional divisor.
void add_jhat(Doc& d) {
    if (!d.once("jhat")) return;
    add_jz(d);
    d.add("spaces", proj("PR1", "Q", "r10"));
    d.add("spaces", proj("PR2", "Q", "r01"));
    d.add("spaces", {{"id", "FPR"}, {"kind", "fiber_product"}, {"left", "PR1"}, {"right", "PR2"}, {"over", "PT"}});
    d.add("spaces", {{"id", "J"},
                     {"kind", "divisor_in"},
                     {"divisor", {{"op", "sum"}, {"terms", {{1, at("r10", "FPR")}, {1, at("r01", "FPR")}}}}}});
    d.add("spaces", {{"id", "Jhat"}, {"kind", "blow_up"}, {"ambient", "J"}, {"codim", "2n-4"}, {"gen", "mE"}, {"sign", -1}});
}

// S = P(B^v) x P(B^v) over G3 and its blow-up along the diagonal, basis (g, f10, f01, mD).
void add_shat(Doc& d) {
    if (!d.once("shat")) return;
    add_k2(d);
    d.add("spaces", proj("Pf1", {{"op", "dual"}, {"of", "B"}}, "f10"));
    d.add("spaces", proj("Pf2", {{"op", "dual"}, {"of", "B"}}, "f01"));
    d.add("spaces", {{"id", "S"}, {"kind", "fiber_product"}, {"left", "Pf1"}, {"right", "Pf2"}, {"over", "G3"}});
    d.add("spaces", {{"id", "Shat"}, {"kind", "blow_up"}, {"ambient", "S"}, {"codim", 2}, {"gen", "mD"}, {"sign", -1}});
}

json untwisted_line(const std::string& taut) {
    return {{"op", "untwisted"}, {"taut", at(taut, "K2")}, {"twist", at("h", "K2")}};
}

json phi_line(const std::string& pk) {
    return {{"op", "c1"},
            {"bundle",
             {{"op", "tensor_line"},
              {"of",
               {{"op", "quotient"},
                {"total", {{"op", "pull"}, {"of", "Tchi"}, {"to", "K2"}}},
                {"sub", {{"op", "pull"}, {"of", {{"op", "taut_sub"}, {"space", pk}}}, {"to", "K2"}}}}},
              {"line", coords("K2", {0, -1, 0, 0})}}}};
}

void add_picard_maps(Doc& d) {
    if (!d.once("picard")) return;
    add_jhat(d);
    add_shat(d);
    d.add("maps", {{"id", "Psi"},
                   {"kind", "columns"},
                   {"source", "Jhat"},
                   {"target", "K2"},
                   {"identification", true},
                   {"columns",
                    {{{"op", "tower_pullback"},
                      {"of", {{"op", "c1"}, {"bundle", {{"op", "dual"}, {"of", {{"op", "taut_sub"}, {"space", "Pb"}}}}}}},
                      {"to", "K2"}},
                     untwisted_line("k10"), untwisted_line("k01"),
                     {{"op", "diagonal_ideal"}, {"space", "K2"}}}}});
    d.add("maps", {{"id", "Xi"},
                   {"kind", "columns"},
                   {"source", "Shat"},
                   {"target", "K2"},
                   {"identification", true},
                   {"columns", {at("g", "K2"), phi_line("Pk1"), phi_line("Pk2"), {{"op", "diagonal_ideal"}, {"space", "K2"}}}}});
    d.note("On P(T_chi) the relative Euler sequences give the ideal of the diagonal as g - 3h - 2k; "
           "mu_2-invariance forces equal coefficients on k10 and k01.");
}

void add_transport(Doc& d) {
    if (!d.once("transport")) return;
    add_picard_maps(d);
    d.add("divisors", {{"id", "N"},
                       {"expr",
                        {{"op", "transport"},
                         {"of", coords("Jhat", {-1, 0, 0, 0})},
                         {"via", {{{"map", "Psi"}}, {{"map", "Xi"}, {"inverted", true}}}},
                         {"drop", {"mD"}},
                         {"onto", "S"}}}});
}

void add_chain_jz(Doc& d) {
    if (!d.once("chain-jz")) return;
    add_jhatz(d);
    add_picard_maps(d);
    d.add("curves", {{"id", "l_PT"}, {"kind", "fiber_line"}, {"space", "PT"}, {"gen", "x1"}});
    d.add("curves", {{"id", "l_P1"}, {"kind", "fiber_line"}, {"space", "P1"}, {"gen", "x2"}});
    d.add("curves", {{"id", "sigma_P1"}, {"kind", "pushforward"}, {"curve", fiber_line("P_A", "t")}, {"restriction", "Lambda"}});
    d.add("curves", {{"id", "l2_JZ"}, {"kind", "fiber_line"}, {"space", "JZ"}, {"gen", "x2"}});
    d.add("curves", {{"id", "l3_JZ"}, {"kind", "fiber_line"}, {"space", "JZ"}, {"gen", "x3"}});
    d.add("curves", {{"id", "sigma_JZ"}, {"kind", "pushforward"}, {"curve", "sigma_P1"}, {"restriction", "JZ_to_P1"}});
    d.add("maps", {{"id", "G2_to_P1"},
                   {"kind", "compose"},
                   {"maps", {tower_map("G2", "P_A"), {{"kind", "inverse"}, {"of", "Lambda"}}}}});
    d.add("maps", {{"id", "swap_P1_P2"},
                   {"kind", "columns"},
                   {"source", "P1"},
                   {"target", "P2"},
                   {"columns", {at("x1", "P2"), at("x3", "P2")}}});
    d.add("maps", {{"id", "jhat_to_jhatz"},
                   {"kind", "columns"},
                   {"source", "Jhat"},
                   {"target", "JhatZ"},
                   {"columns", {at("x1", "JhatZ"), at("x2", "JhatZ"), at("x3", "JhatZ"),
                                coords("JhatZ", {0, 0, 0, -1})}}});
    d.add("chains",
          {{"id", "jz-chain"},
           {"base_space", "PT"},
           {"base_cone", {"l_PT"}},
           {"steps",
            {{{"space", "P1"},
              {"curves", {"l_P1", "sigma_P1"}},
              {"c_prime", {{"name", "P1 -> PT"}, {"map", tower_map("PT", "P1")}}},
              {"c_double_prime", {{"name", "P1 = P(A) -> G2"}, {"map", "G2_to_P1"}}}},
             {{"space", "JZ"},
              {"curves", {"l3_JZ", "l2_JZ", "sigma_JZ"}},
              {"c_prime", {{"name", "JZ -> P1"}, {"map", tower_map("P1", "JZ")}}},
              {"c_double_prime",
               {{"name", "JZ -> P2 -> G2"},
                {"map", {{"kind", "compose"}, {"maps", {"G2_to_P1", "swap_P1_P2", tower_map("P2", "JZ")}}}}}}},
             {{"space", "JhatZ"},
              {"curves", {"gamma_hat", "eps1_hat", "eps2_hat", "sigma_hat"}},
              {"c_prime", {{"name", "JhatZ -> JZ"}, {"map", tower_map("JZ", "JhatZ")}}},
              {"c_double_prime",
               {{"name", "JhatZ -> K2 -> G3"},
                {"map",
                 {{"kind", "compose"},
                  {"maps", {tower_map("G3", "K2"), {{"kind", "inverse"}, {"of", "Psi"}}, "jhat_to_jhatz"}}}}}}}}}});
}

void add_chain_ez(Doc& d) {
    if (!d.once("chain-ez")) return;
    add_ez(d);
    d.add("curves", {{"id", "l_PT"}, {"kind", "fiber_line"}, {"space", "PT"}, {"gen", "x1"}});
    d.add("curves", {{"id", "rho_line"},
                     {"kind", "pushforward"},
                     {"curve", fiber_line("P1", "x2")},
                     {"restriction", {{"kind", "inverse"}, {"of", "Lambda"}}}});
    d.add("curves", {{"id", "t_line"}, {"kind", "fiber_line"}, {"space", "P_A"}, {"gen", "t"}});
    d.add("curves", {{"id", "gamma_prime"}, {"kind", "fiber_line"}, {"space", "EZ"}, {"gen", "s"}});
    d.add("curves", {{"id", "sigma_prime"}, {"kind", "fiber_line"}, {"space", "EZ"}, {"gen", "t"}});
    d.add("curves", {{"id", "eps_prime_EJ"},
                     {"kind", "declared"},
                     {"space", "EJ"},
                     {"vector", {1, 0, -1}},
                     {"note", "section of P(A^perp/A) over a line in a fiber of the Grassmannian, "
                              "pairing 1 with a and -1 with u"}});
    d.add("curves", {{"id", "eps_prime"}, {"kind", "pushforward"}, {"curve", "eps_prime_EJ"}, {"restriction", "EZ_to_EJ"}});
    d.add("chains",
          {{"id", "ez-chain"},
           {"base_space", "PT"},
           {"base_cone", {"l_PT"}},
           {"steps",
            {{{"space", "P_A"},
              {"curves", {"rho_line", "t_line"}},
              {"c_prime",
               {{"name", "P(A) -> PT"},
                {"map", {{"kind", "columns"}, {"source", "PT"}, {"target", "P_A"}, {"columns", {at("t", "P_A")}}}}}},
              {"c_double_prime", {{"name", "P(A) -> G2"}, {"map", tower_map("G2", "P_A")}}}},
             {{"space", "EZ"},
              {"curves", {"gamma_prime", "eps_prime", "sigma_prime"}},
              {"c_prime", {{"name", "EZ -> P(A)"}, {"map", tower_map("P_A", "EZ")}}},
              {"c_double_prime",
               {{"name", "EZ -> contraction of the diagonal"},
                {"contracts", {"eps_prime", "sigma_prime"}},
                {"note", "both curves lie in fibers of the contraction collapsing the diagonal direction"}}}}}}});
    d.note("eps_prime is declared on EJ from the splitting type of A^perp/A along a line and pushed to EZ.");
}

void add_iz1z2(Doc& d) {
    if (!d.once("iz1z2")) return;
    add_point(d);
    d.add("spaces", proj("PH1", trivial("pt", "2n-2"), "h1"));
    d.add("spaces", proj("PH2", trivial("pt", "2n-2"), "h2"));
    d.add("spaces", {{"id", "PH"}, {"kind", "fiber_product"}, {"left", "PH1"}, {"right", "PH2"}, {"over", "pt"}});
    d.add("spaces", {{"id", "IZ1Z2"},
                     {"kind", "divisor_in"},
                     {"divisor", {{"op", "sum"}, {"terms", {{1, at("h1", "PH")}, {1, at("h2", "PH")}}}}}});
    d.add("spaces", {{"id", "IhatLattice"}, {"kind", "formal_base"}, {"pic", {"x1", "x2", "x3", "x4"}}, {"dim", "8n-7"}});
    d.add("maps", {{"id", "to_IZ1Z2"},
                   {"kind", "columns"},
                   {"source", "IhatLattice"},
                   {"target", "IZ1Z2"},
                   {"columns", {coords("IZ1Z2", {0, 0}), at("h1", "IZ1Z2"), at("h2", "IZ1Z2"), coords("IZ1Z2", {0, 0})}}});
    for (auto [id, g] : {std::pair{"tau1", "h1"}, std::pair{"tau2", "h2"}}) {
        d.add("curves", {{"id", id}, {"kind", "fiber_line"}, {"space", "IZ1Z2"}, {"gen", g}});
        d.add("curves", {{"id", std::string(id) + "_pushed"}, {"kind", "pushforward"}, {"curve", id}, {"restriction", "to_IZ1Z2"}});
    }
}

// Incidence divisor over a base of dimension 4n with V of rank 2n-2, and the
// product of two projective planes inside it.
void add_incidence(Doc& d) {
    if (!d.once("incidence")) return;
    add_point(d);
    d.add("spaces", {{"id", "Bi"}, {"kind", "formal_base"}, {"pic", json::array()}, {"dim", "4n"}});
    d.add("bundles", {{"id", "V"}, {"op", "trivial"}, {"space", "Bi"}, {"rank", "2n-2"}});
    d.add("spaces", proj("PV", "V", "v"));
    d.add("spaces", proj("PVd", {{"op", "dual"}, {"of", "V"}}, "w"));
    d.add("spaces", {{"id", "PVV"}, {"kind", "fiber_product"}, {"left", "PV"}, {"right", "PVd"}, {"over", "Bi"}});
    d.add("spaces", {{"id", "II"},
                     {"kind", "divisor_in"},
                     {"divisor", {{"op", "sum"}, {"terms", {{1, at("v", "PVV")}, {1, at("w", "PVV")}}}}}});
    d.add("spaces", proj("PP1", trivial("pt", 3), "p1"));
    d.add("spaces", proj("PP2", trivial("pt", 3), "p2"));
    d.add("spaces", {{"id", "PP"}, {"kind", "fiber_product"}, {"left", "PP1"}, {"right", "PP2"}, {"over", "pt"}});
}

// ---- scenarios --------------------------------------------------------------------

json jz_intersection_table() {
    Doc d("jz-intersection-table", "Intersection numbers of the four curve classes on the blow-up of JZ with x1..x4");
    add_jhatz(d);
    const std::string anchor = "The intersection matrix of";
    const json rows = {{0, 1, 0, 1}, {0, 0, 1, 1}, {1, -1, -1, -1}, {0, 0, 0, -1}};
    for (size_t i = 0; i < kJzCurves.size(); ++i)
        for (size_t k = 0; k < 4; ++k)
            d.expect(kJzCurves[i] + ".x" + std::to_string(k + 1), pairing(kJzCurves[i], jz_gens()[k]), rows[i][k],
                     "PAPER", anchor);
    d.j["display"] = {{"table", {{"curves", kJzCurves}, {"divisors", jz_gens()}}}};
    return d.finish();
}

json jz_canonical_class() {
    Doc d("jz-canonical-class", "Canonical classes along the JZ tower and K-negativity of the four curves");
    add_jhatz(d);
    d.add("divisors", {{"id", "K_I_on_JZ"},
                       {"expr", {{"op", "ambient_canonical"}, {"space", "JZ"}, {"normal", {{"op", "line"}, {"c1", coords("JZ", {-1, 0, 0})}}}}}});
    d.add("divisors", {{"id", "K_Ihat_on_JhatZ"},
                       {"expr", {{"op", "blowup_ambient_canonical"}, {"space", "JhatZ"}, {"restricted", "K_I_on_JZ"}, {"codim", "2n-3"}}}});
    d.expect("K_JZ", {{"op", "div"}, {"of", {{"op", "canonical"}, {"space", "JZ"}}}}, {"-2n", "3-2n", "3-2n"}, "DERIVED",
             "adjunction on the fiber product of P(L^perp/L)");
    d.expect("K_I restricted to JZ", {{"op", "div"}, {"of", "K_I_on_JZ"}}, {"1-2n", "3-2n", "3-2n"}, "DERIVED",
             "normal bundle of JZ is L^v");
    d.expect("K_Ihat restricted to JhatZ", {{"op", "div"}, {"of", "K_Ihat_on_JhatZ"}}, {"1-2n", "3-2n", "3-2n", "2n-4"},
             "PAPER", "(1-2n)x_1 + (3-2n)x_2");
    d.expect("K_JhatZ", {{"op", "div"}, {"of", {{"op", "canonical"}, {"space", "JhatZ"}}}}, {"-2n", "3-2n", "3-2n", "2n-5"},
             "DERIVED", "blow-up formula along a center of codimension 2n-4");
    json kneg = json::array();
    for (const char* v : {"-1", "-1", "-1", "4-2n"}) kneg.push_back({{"value", v}, {"verdict", "negative"}});
    d.expect("K-pairings", {{"op", "kneg"}, {"canonical", "K_Ihat_on_JhatZ"}, {"curves", kJzCurves}}, kneg, "PAPER",
             "(1-2n)x_1 + (3-2n)x_2");
    d.expect("dim JhatZ", {{"op", "dim"}, {"space", "JhatZ"}}, "6n-8", "TRIVIAL", "blow-ups preserve dimension");
    return d.finish();
}

json picard_matrices() {
    Doc d("picard-matrices", "Matrices of the two Picard isomorphisms and the printed inverse");
    add_picard_maps(d);
    const json psi = {{0, 0, 0, 1}, {1, 1, 1, -3}, {0, 1, 0, -1}, {0, 0, 1, -1}};
    const json xi = {{1, -1, -1, 1}, {0, 2, 2, -3}, {0, 1, 0, -1}, {0, 0, 1, -1}};
    const json xi_inv = {{1, 1, -1, -1}, {0, 1, -1, -2}, {0, 1, -2, -1}, {0, 1, -2, -2}};
    d.expect("Psi matrix", {{"op", "map_matrix"}, {"of", "Psi"}}, psi, "PAPER", "The matrix of Psi^* in the bases");
    d.expect("Xi matrix", {{"op", "map_matrix"}, {"of", "Xi"}}, xi, "PAPER", "The matrix of Xi^* and its inverse");
    d.expect("Xi inverse matrix", {{"op", "map_matrix"}, {"of", {{"kind", "inverse"}, {"of", "Xi"}}}}, xi_inv, "PAPER",
             "The matrix of Xi^* and its inverse");
    d.expect("printed Xi times printed inverse",
             {{"op", "matrix_product_is_identity"}, {"a", {{"rows", xi}}}, {"b", {{"rows", xi_inv}}}}, true, "PAPER",
             "The matrix of Xi^* and its inverse");
    d.expect("engine Xi times printed inverse",
             {{"op", "matrix_product_is_identity"}, {"a", "Xi"}, {"b", {{"rows", xi_inv}}}}, true, "DERIVED",
             "The matrix of Xi^* and its inverse");
    d.expect("diagonal ideal", {{"op", "div"}, {"of", {{"op", "diagonal_ideal"}, {"space", "K2"}}}}, {1, -3, -1, -1},
             "PAPER", "J|_{P(T_chi)} = Omega^1_kappa");
    return d.finish();
}

json normal_bundle_transport() {
    Doc d("normal-bundle-transport", "The normal line bundle carried from Jhat to S through Psi and the inverse of Xi");
    add_transport(d);
    d.expect("rho^*L on Jhat", {{"op", "div"}, {"of", coords("Jhat", {-1, 0, 0, 0})}}, {-1, 0, 0, 0}, "TRIVIAL",
             "x_1 is the class of L^v");
    d.expect("after Psi", {{"op", "div"}, {"of", {{"op", "pullback"}, {"map", "Psi"}, {"of", coords("Jhat", {-1, 0, 0, 0})}}}},
             {0, -1, 0, 0}, "DERIVED", "first column of the matrix of Psi^*");
    d.expect("transported class", {{"op", "div"}, {"of", "N"}}, {-1, -1, -1}, "PAPER",
             "corresponds to phi^*O_gamma(-1) (x) O_phi(-1,-1)");
    return d.finish();
}

json mori_chain_jz() {
    Doc d("mori-chain-jz", "Propagation of the Mori cone from P(T) up to the blow-up of JZ");
    add_chain_jz(d);
    d.expect("chain", {{"op", "mori_chain"}, {"chain", "jz-chain"}},
             {{"cone", {"gamma_hat", "eps1_hat", "eps2_hat", "sigma_hat"}},
              {"hypotheses_hold", true},
              {"failure", ""}},
             "PAPER", "R+(gamma) + R+(eps^1) + R+(eps^2) + R+(sigma)");
    d.expect("sigma on P1", {{"op", "curve"}, {"of", "sigma_P1"}}, {1, -1}, "DERIVED", "pushforward of a fiber line of P(A)");
    d.expect("sigma on JZ", {{"op", "curve"}, {"of", "sigma_JZ"}}, {1, -1, -1}, "DERIVED", "diagonal embedding of P1 in JZ");
    d.expect("contraction to G3",
             {{"op", "map_matrix"},
              {"of", {{"kind", "compose"}, {"maps", {tower_map("G3", "K2"), {{"kind", "inverse"}, {"of", "Psi"}}, "jhat_to_jhatz"}}}}},
             {{1}, {1}, {1}, {-1}}, "DERIVED", "g pulls back to x1 + x2 + x3 - x4");
    d.j["display"] = {{"cone", {{"chain", "jz-chain"}, {"face", {"sigma_hat"}}}}};
    return d.finish();
}

json mori_chain_ez() {
    Doc d("mori-chain-ez", "Propagation of the Mori cone from P(T) to P(A) and to EZ");
    add_chain_ez(d);
    d.expect("chain", {{"op", "mori_chain"}, {"chain", "ez-chain"}},
             {{"cone", {"gamma_prime", "eps_prime", "sigma_prime"}}, {"hypotheses_hold", true}, {"failure", ""}}, "PAPER",
             "R+(gamma') + R+(eps') + R+(sigma')");
    d.expect("rho line on P(A)", {{"op", "curve"}, {"of", "rho_line"}}, {1, 0}, "DERIVED", "Lambda identifies P1 with P(A)");
    d.expect("eps' on EZ", {{"op", "curve"}, {"of", "eps_prime"}}, {1, 0, -2}, "DERIVED", "s pulls back to u - a");
    d.expect("O(E) on a P(A)-fiber line", pairing("sigma_prime", {{"op", "sum"}, {"terms", {{-1, at("t", "EZ")}, {-1, at("s", "EZ")}}}}),
             -1, "PAPER", "O(E)|_{P^1} = O_{P^1}(-1)");
    d.j["display"] = {{"cone", {{"chain", "ez-chain"}}}};
    return d.finish();
}

json pushforward_iz1z2() {
    Doc d("pushforward-iz1z2", "Classes of the two lines of IZ1Z2 in terms of the curves on the blow-up of JZ");
    add_jhatz(d);
    add_iz1z2(d);
    json ih = {at("x1", "IhatLattice"), at("x2", "IhatLattice"), at("x3", "IhatLattice"), at("x4", "IhatLattice")};
    d.expect("tau1 pairings", {{"op", "curve"}, {"of", "tau1_pushed"}}, {0, 1, 0, 0}, "DERIVED", "x2 restricts to h1, x3 to h2");
    d.expect("tau1", {{"op", "solve_pushforward"}, {"observed", {{"curve", "tau1_pushed"}, {"divisors", ih}}}, {"curves", kJzCurves}, {"divisors", jz_gens()}},
             {1, 0, 0, 1}, "PAPER", "R+(eps^1 + gamma) + R+(eps^2 + gamma)");
    d.expect("tau2", {{"op", "solve_pushforward"}, {"observed", {{"curve", "tau2_pushed"}, {"divisors", ih}}}, {"curves", kJzCurves}, {"divisors", jz_gens()}},
             {0, 1, 0, 1}, "PAPER", "R+(eps^1 + gamma) + R+(eps^2 + gamma)");
    d.expect("singular table", {{"op", "expect_error"},
                                {"compute", {{"op", "solve_pushforward"}, {"observed", {1, 1}},
                                             {"curves", {"tau1", "tau2"}}, {"divisors", {at("h1", "IZ1Z2"), at("h1", "IZ1Z2")}}}}},
             "contract-error", "TRIVIAL", "a pushforward needs a nondegenerate table");
    return d.finish();
}

json extremal_sigma_ray() {
    Doc d("extremal-sigma-ray", "Supporting functional for the ray spanned by sigma_hat");
    add_jhatz(d);
    d.expect("certificate",
             {{"op", "extremal_certificate"}, {"curves", kJzCurves}, {"face", {"sigma_hat"}}},
             {{"status", "found"}, {"functional", {3, 2, 2, -1}}, {"values", {1, 1, 0, 1}}, {"height", 3}, {"sound", true}},
             "DERIVED", "3x_1 + 2x_2 + 2x_3 - x_4 is nef on the sub-lattice");
    d.expect("whole cone is supported only by zero",
             {{"op", "extremal_certificate"}, {"curves", kJzCurves}, {"face", {"eps1_hat", "eps2_hat", "sigma_hat", "gamma_hat"}}, {"bound", 1}},
             {{"status", "found"}, {"functional", {0, 0, 0, 0}}, {"values", {0, 0, 0, 0}}, {"height", 0}, {"sound", true}},
             "TRIVIAL", "the zero functional supports the whole cone");
    d.note("Extremality is certified inside the span of the four explicit generators only; "
           "the claim for the full Mori cone is not machine-checked.");
    d.j["display"] = {{"cone", {{"curves", kJzCurves}, {"face", {"sigma_hat"}}}}};
    return d.finish();
}

json ez_kernel() {
    Doc d("ez-kernel-x2-x3", "Kernel of the restriction to the exceptional divisor of the blow-up of JZ");
    add_jhatz(d);
    json res = {{"kind", "exceptional_restriction"}, {"space", "JhatZ"}};
    d.expect("restriction matrix", {{"op", "map_matrix"}, {"of", res}}, {{0, 1, 1, 1}, {1, -1, -1, -1}, {0, 0, 0, -1}},
             "DERIVED", "x2 and x3 both restrict to a - t");
    d.expect("kernel",
             {{"op", "restriction_kernel"}, {"map", res}, {"curves", kJzCurves}},
             {{"kernel", {{0, 1, -1, 0}}}, {"perp", {{1, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}}}, "PAPER",
             "x_2 - x_3 restricts trivially");
    d.j["display"] = {{"table", {{"curves", kJzCurves}, {"divisors", jz_gens()}, {"kernel", {{"map", res}, {"curves", kJzCurves}}}}}};
    return d.finish();
}

json local_model_stabilizers() {
    Doc d("local-model-stabilizers", "Stabilizers of the local models in PGL(2) = SO(W) and in C*");
    d.add("models", {{"id", "E"}, {"kind", "symplectic"}, {"standard", 3}});
    d.add("models", {{"id", "W"}, {"kind", "quad_w"}});
    const json zero = {0, 0, 0, 0, 0, 0}, x1 = {1, 0, 0, 0, 0, 0}, x2 = {0, 1, 0, 0, 0, 0}, y1 = {0, 0, 0, 1, 0, 0};
    d.add("models", {{"id", "phi_zero"}, {"kind", "hom"}, {"columns", {zero, zero, zero}}});
    d.add("models", {{"id", "phi_null_line"}, {"kind", "hom"}, {"columns", {x1, zero, zero}}});
    d.add("models", {{"id", "phi_anisotropic"}, {"kind", "hom"}, {"columns", {zero, x1, zero}}});
    d.add("models", {{"id", "phi_rank2"}, {"kind", "hom"}, {"columns", {x1, x2, zero}}});
    d.add("models", {{"id", "phi_not_isotropic"}, {"kind", "hom"}, {"columns", {x1, y1, zero}}});
    d.add("models", {{"id", "pair_zero"}, {"kind", "ext_pair"}, {"e12", {0, 0}}, {"e21", {0, 0}}});
    d.add("models", {{"id", "pair_generic"}, {"kind", "ext_pair"}, {"e12", {1, 2}}, {"e21", {3, 4}}});
    d.add("models", {{"id", "pair_degenerate"}, {"kind", "ext_pair"}, {"e12", {1, 0}}, {"e21", {1, 0}}, {"pairing", {{1, 0}, {0, 0}}}});
    auto omega = [](const char* phi) {
        return json{{"op", "stabilizer_class_omega"}, {"phi", phi}, {"space", "E"}, {"w", "W"}};
    };
    const char* pgl = "stabilisers in PGL(2)";
    d.expect("omega: zero map", omega("phi_zero"), "FULL_SO_W", "PAPER", pgl);
    d.expect("omega: rank 1, isotropic kernel normal", omega("phi_null_line"), "ADDITIVE", "PAPER", pgl);
    d.expect("omega: rank 1, anisotropic kernel normal", omega("phi_anisotropic"), "MULTIPLICATIVE", "PAPER", pgl);
    d.expect("omega: rank 2", omega("phi_rank2"), "TRIVIAL", "PAPER", pgl);
    d.expect("omega: non-isotropic image", {{"op", "expect_error"}, {"compute", omega("phi_not_isotropic")}},
             "not-in-hom-omega", "TRIVIAL", "Hom^omega(W, E) requires isotropic image");
    d.expect("omega: family sweep", {{"op", "stabilizer_family_sweep"}}, {{"count", 63}, {"agree", 63}}, "PAPER", pgl);
    d.expect("sigma: zero pair", {{"op", "stabilizer_class_sigma"}, {"pair", "pair_zero"}}, "MULTIPLICATIVE", "PAPER",
             "stabilisers in C*");
    d.expect("sigma: nonzero pair", {{"op", "stabilizer_class_sigma"}, {"pair", "pair_generic"}}, "TRIVIAL", "PAPER",
             "stabilisers in C*");
    d.expect("sigma: family sweep", {{"op", "sigma_family_sweep"}}, {{"count", 25}, {"agree", 25}}, "PAPER",
             "stabilisers in C*");
    d.expect("Yoneda square on Hom(W, E)", {{"op", "yoneda_omega"}, {"phi", "phi_not_isotropic"}, {"space", "E"}},
             {1, 0, 0}, "DERIVED", "phi^* omega evaluated on pairs of basis vectors");
    d.expect("Yoneda square on Ext pair", {{"op", "yoneda_sigma"}, {"pair", "pair_generic"}},
             {{"alpha", -11}, {"beta", 11}, {"in_zero_locus", false}}, "DERIVED", "(-Psi, Psi)");
    d.expect("C* scaling", {{"op", "po2_act"}, {"pair", "pair_generic"}, {"scale", 2}},
             {{"e12", {2, 4}}, {"e21", {"3/2", 2}}, {"psi_before", 11}, {"psi_after", 11}, {"equivariant", true}},
             "DERIVED", "lambda acts by lambda and lambda^{-1}");
    d.expect("degenerate pairing", {{"op", "expect_error"}, {"compute", {{"op", "yoneda_sigma"}, {"pair", "pair_degenerate"}}}},
             "degenerate-model", "TRIVIAL", "the Ext pairing is perfect");
    return d.finish();
}

json normal_cone_quadric() {
    Doc d("normal-cone-quadric", "The normal cone along the deepest stratum is a cone over a smooth quadric");
    d.expect("quadric", {{"op", "normal_cone_quadric"}}, {{"rank", "4n-4"}, {"variables", "4n-4"}, {"smooth", true}},
             "PAPER", "affine cone over a smooth quadric in P^{4n-5}");
    d.expect("degenerate pairing is detected",
             {{"op", "expect_error"}, {"compute", {{"op", "normal_cone_quadric"}, {"degenerate", true}}}},
             "degenerate-model", "TRIVIAL", "the Ext pairing is perfect");
    d.expect("phi^* omega is a regular sequence", {{"op", "regular_sequence"}, {"family", "phi_star_omega"}, {"m", 3}}, true,
             "PAPER", "generated in degree 2");
    d.expect("single pairing quadric is regular", {{"op", "regular_sequence"}, {"family", "pairing"}, {"n", 3}}, true,
             "DERIVED", "a nonzero quadric is a regular sequence");
    d.expect("repeated quadric is not regular", {{"op", "regular_sequence"}, {"family", "pairing_twice"}, {"n", 3}}, false,
             "TRIVIAL", "q, q is not a regular sequence");
    return d.finish();
}

json incidence_fixed_locus() {
    Doc d("incidence-fixed-locus", "Fixed points of the swap on the incidence correspondence over F3");
    d.expect("m = 2", {{"op", "fixed_locus_incidence"}, {"m", 2}},
             {{"points", 4}, {"incidence", 4}, {"fixed", 4}, {"diagonal", 4}, {"fixed_equals_diagonal", true}}, "DERIVED",
             "the mu_2 fixed locus is the blow-up center");
    d.expect("m = 4", {{"op", "fixed_locus_incidence"}, {"m", 4}},
             {{"points", 40}, {"incidence", 520}, {"fixed", 40}, {"diagonal", 40}, {"fixed_equals_diagonal", true}},
             "DERIVED", "the mu_2 fixed locus is the blow-up center");
    return d.finish();
}

json yoneda_isotropy() {
    Doc d("yoneda-isotropy", "Zero locus of the Yoneda square versus isotropy of the image");
    d.expect("seeded samples over Q", {{"op", "isotropy_samples"}, {"count", 1000}},
             {{"count", 1000}, {"agree", 1000}, {"positives", 750}}, "DERIVED", "Upsilon(phi) = 0 iff im(phi) is isotropic");
    d.expect("all of Hom(F3^3, F3^4)", {{"op", "isotropy_enumeration"}, {"m", 4}},
             {{"count", 531441}, {"agree", 531441}, {"positives", 26001}}, "DERIVED", "Upsilon(phi) = 0 iff im(phi) is isotropic");
    return d.finish();
}

json contraction_numerics() {
    Doc d("contraction-numerics", "Restriction degrees, cohomology of P2 x P2, conormal ranks and graded pieces");
    add_ez(d);
    add_transport(d);
    add_incidence(d);
    d.expect("O(E) on a P(A)-fiber line", pairing(fiber_line("EZ", "t"), {{"op", "sum"}, {"terms", {{-1, at("t", "EZ")}, {-1, at("s", "EZ")}}}}),
             -1, "PAPER", "O(E)|_{P^1} = O_{P^1}(-1)");
    d.expect("O(Jbar) on the first ruling", pairing(fiber_line("S", "f10"), "N"), -1, "PAPER",
             "O_phi(-1,-1) (x) phi^*O_gamma(-1)");
    d.expect("O(Jbar) on the second ruling", pairing(fiber_line("S", "f01"), "N"), -1, "PAPER",
             "O_phi(-1,-1) (x) phi^*O_gamma(-1)");
    for (int k = 0; k <= 3; ++k) {
        long h0 = (k + 1) * (k + 2) / 2;
        h0 *= h0;
        for (int q = 0; q <= 4; ++q)
            d.expect("h^" + std::to_string(q) + " O(" + std::to_string(k) + "," + std::to_string(k) + ")",
                     {{"op", "coh_product_proj"}, {"a", k}, {"b", k}, {"q", q}}, q == 0 ? h0 : 0, q == 0 ? "DERIVED" : "PAPER",
                     "h^q(P^2 x P^2, O(k,k)) = 0 for q > 0");
        json line = coords("G3", {k});
        d.expect("graded piece rank k=" + std::to_string(k),
                 {{"op", "bundle_rank"},
                  {"of", {{"op", "tensor_line"},
                          {"of", {{"op", "tensor"}, {"a", {{"op", "symk"}, {"of", "B"}, {"k", k}}}, {"b", {{"op", "symk"}, {"of", "B"}, {"k", k}}}}},
                          {"line", line}}}},
                 h0, "PAPER", "(S^k B)^{(x)2} (x) O_gamma(k)");
    }
    d.add("bundles", {{"id", "conormal"},
                      {"op", "dsum"},
                      {"a", {{"op", "line"}, {"c1", {{"op", "sum"}, {"terms", {{1, at("p1", "PP")}, {1, at("p2", "PP")}}}}}}},
                      {"b", trivial("PP", "8n-12")}});
    d.expect("conormal rank", {{"op", "bundle_rank"}, {"of", "conormal"}}, "8n-11", "PAPER", "I_y/I_y^2 = O(1,1) + O^d");
    d.expect("codimension of P2 x P2", {{"op", "codim"}, {"sub", "PP"}, {"ambient", "II"}}, "8n-11", "DERIVED",
             "dimension count in the incidence divisor");
    d.expect("O(1,1) summand",
             {{"op", "div"},
              {"of", {{"op", "pullback"},
                      {"map", {{"kind", "columns"}, {"source", "S"}, {"target", "PP"},
                               {"columns", {coords("PP", {0, 0}), at("p1", "PP"), at("p2", "PP")}}}},
                      {"of", {{"op", "sum"}, {"terms", {{-1, "N"}}}}}}}},
             {1, 1}, "PAPER", "I_y/I_y^2 = O(1,1) + O^d");
    d.expect("dim of the incidence divisor", {{"op", "dim"}, {"space", "II"}}, "8n-7", "TRIVIAL", "hypersurface in P(V) x P(V^v)");
    return d.finish();
}

json convention_regression() {
    Doc d("convention-regression", "Euler-sequence conventions for relative tangent and cotangent classes");
    add_k2(d);
    d.expect("relative cotangent of P(T_chi)", {{"op", "div"}, {"of", {{"op", "relative_cotangent"}, {"space", "Pk1"}}}},
             {1, -3, -2}, "PAPER", "J|_{P(T_chi)} = Omega^1_kappa");
    d.expect("relative tangent of P(B)", {{"op", "bundle"}, {"of", "Tchi"}}, {{"rank", 2}, {"c1", {-1, 3}}}, "DERIVED",
             "Euler sequence 0 -> O -> pi^*B(1) -> T -> 0");
    d.expect("diagonal ideal restricts to the cotangent class",
             {{"op", "div"}, {"of", {{"op", "pullback"}, {"map", {{"kind", "diagonal_restriction"}, {"space", "K2"}}},
                                    {"of", {{"op", "diagonal_ideal"}, {"space", "K2"}}}}}},
             {1, -3, -2}, "PAPER", "J|_{P(T_chi)} = Omega^1_kappa");
    d.expect("tautological sub of P(B)", {{"op", "bundle"}, {"of", {{"op", "taut_sub"}, {"space", "Pb"}}}},
             {{"rank", 1}, {"c1", {0, -1}}}, "TRIVIAL", "O(-1) inside pi^*B");
    d.expect("canonical class needs a base canonical class",
             {{"op", "expect_error"}, {"compute", {{"op", "div"}, {"of", {{"op", "canonical"}, {"space", "Pk1"}}}}}},
             "contract-error", "TRIVIAL", "G3 carries no canonical class");
    return d.finish();
}

using Builder = std::function<json()>;

const std::vector<std::pair<std::string, Builder>>& registry() {
    static const std::vector<std::pair<std::string, Builder>> r = {
        {"contraction-numerics", contraction_numerics},
        {"convention-regression", convention_regression},
        {"extremal-sigma-ray", extremal_sigma_ray},
        {"ez-kernel-x2-x3", ez_kernel},
        {"incidence-fixed-locus", incidence_fixed_locus},
        {"jz-canonical-class", jz_canonical_class},
        {"jz-intersection-table", jz_intersection_table},
        {"local-model-stabilizers", local_model_stabilizers},
        {"mori-chain-ez", mori_chain_ez},
        {"mori-chain-jz", mori_chain_jz},
        {"normal-bundle-transport", normal_bundle_transport},
        {"normal-cone-quadric", normal_cone_quadric},
        {"picard-matrices", picard_matrices},
        {"pushforward-iz1z2", pushforward_iz1z2},
        {"yoneda-isotropy", yoneda_isotropy},
    };
    return r;
}

}  // namespace

std::vector<ScenarioInfo> list_scenarios() {
    std::vector<ScenarioInfo> out;
    for (const auto& [name, build] : registry()) {
        Scenario s = scenario_from_json(build(), name);
        out.push_back({s.name, s.description, s.policy});
    }
    return out;
}

json export_scenario(const std::string& name) {
    for (const auto& [n, build] : registry())
        if (n == name) return build();
    throw UnknownScenario(name);
}

Scenario builtin_scenario(const std::string& name) { return scenario_from_json(export_scenario(name), name); }

VerificationReport run_scenario(const std::string& name, NChoice n) { return run(builtin_scenario(name), n); }

}  // namespace towerlab::scenario
