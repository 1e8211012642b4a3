// Acceptance gate: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (0 when everything holds).

#include <phdet/cli/input.hpp>
#include <phdet/phdet.hpp>

#include "../support/oracles.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace phdet;
using nlohmann::json;

namespace {

// Pinned limits. All compared quantities are integers, so equality is exact.
constexpr double kCliWallSeconds = 5.0;
constexpr double kGrobnerSuiteSeconds = 60.0;
constexpr long long kMaxMu = 100;
constexpr long long kMaxMuBouquet = 20;
constexpr int kLeGreuelInstances = 50;
constexpr std::size_t kMaxQuotientDimension = 12;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fixture(const std::string& name) { return std::string(PHDET_FIXTURE_DIR) + "/" + name; }

struct CliRun {
    int code = -1;
    json report;
    double seconds = 0;
};

CliRun run_cli(const std::string& args) {
    std::string cmd = std::string(PHDET_CLI_PATH) + " --json " + args + " 2>/dev/null";
    auto start = Clock::now();
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) throw std::runtime_error("cannot start " + cmd);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    CliRun r;
    r.seconds = seconds_since(start);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.report = json::parse(out);
    return r;
}

// Collects failure notes for one criterion.
class Check {
public:
    void expect(bool ok, const std::string& what) {
        if (!ok) failures_.push_back(what);
    }
    bool ok() const { return failures_.empty(); }
    std::string notes() const {
        std::string s;
        for (const auto& f : failures_) s += (s.empty() ? "" : "; ") + f;
        return s;
    }

private:
    std::vector<std::string> failures_;
};

int failed = 0;

void report(int id, const std::string& title, const std::function<std::string(Check&)>& body) {
    Check c;
    std::string detail;
    try {
        detail = body(c);
    } catch (const std::exception& e) {
        c.expect(false, std::string("exception: ") + e.what());
    }
    if (!c.ok()) ++failed;
    std::cout << (c.ok() ? "PASS" : "FAIL") << "  " << id << "  " << title;
    if (!detail.empty()) std::cout << "  (" << detail << ")";
    if (!c.ok()) std::cout << "  -- " << c.notes();
    std::cout << std::endl;
}

SingularPointRecord record(int d, long long mu) {
    SingularPointRecord r;
    r.point = Point::coordinate(d + 3, static_cast<std::size_t>(d + 2));
    r.type = {2, 3, 2};
    r.d = d;
    r.smoothable = true;
    r.mu = mu;
    return r;
}

Ideal ideal_of(const VariableList& v, std::initializer_list<const char*> gens) {
    Ideal I(v);
    for (const char* g : gens) I.add(parse_polynomial(g, v));
    return I;
}

std::string criterion_1(Check& c) {
    auto r = run_cli("verify " + fixture("twisted_cubic.json"));
    const auto& id = r.report["identity"];
    const auto& ledger = r.report["ledger"];
    c.expect(r.code == 0, "exit code " + std::to_string(r.code));
    c.expect(id["status"] == "verified", "status " + id["status"].dump());
    c.expect(id["lhs"] == 5 && id["rhs"] == 5, "sides " + id["lhs"].dump() + " vs " + id["rhs"].dump());
    std::vector<long long> indices;
    for (const auto& e : ledger["entries"]) indices.push_back(e["index"].get<long long>());
    std::sort(indices.begin(), indices.end());
    c.expect(indices == std::vector<long long>{1, 1, 3}, "indices");
    c.expect(ledger["chi_X"] == 3, "chi_X");
    c.expect(ledger["defects"].size() == 1 && ledger["defects"][0]["defect"] == 2, "defect 1 + mu");
    c.expect(r.seconds < kCliWallSeconds, "wall time");
    std::ostringstream s;
    s << id["summary"].get<std::string>() << ", exit " << r.code << ", " << r.seconds << " s";
    return s.str();
}

std::string criterion_2(Check& c) {
    auto e = run_cli("euler " + fixture("twisted_cubic_euler.json"));
    c.expect(e.code == 0, "euler exit code");
    c.expect(e.report["identity"]["unknown"] == "chi_X", "euler unknown");
    c.expect(e.report["identity"]["value"] == 3, "chi_X = " + e.report["identity"]["value"].dump());
    auto i = run_cli("index " + fixture("twisted_cubic_index.json") + " --at [0:0:0:0:1]");
    c.expect(i.code == 0, "index exit code");
    c.expect(i.report["identity"]["unknown"] == "index@[0:0:0:0:1]", "index unknown");
    c.expect(i.report["identity"]["value"] == 3, "index = " + i.report["identity"]["value"].dump());
    return "chi_X = " + e.report["identity"]["value"].dump() + ", vertex index = " + i.report["identity"]["value"].dump();
}

std::string criterion_3(Check& c) {
    auto r = run_cli("analyze " + fixture("twisted_cubic.json"));
    const auto& k = r.report["classification"];
    c.expect(r.code == 0, "exit code");
    c.expect(k["codimension"] == 2 && k["expected_codimension"] == 2, "codimension");
    c.expect(k["determinantal"] == true, "determinantal");
    c.expect(k["dimension"] == 2, "d");
    c.expect(k["isolated_singularity"] == true, "isolated");
    c.expect(k["singular_points"] == json::array({"[0:0:0:0:1]"}), "singular points " + k["singular_points"].dump());
    c.expect(k["smoothable"] == true && k["germ_ambient_dim"] == 4 && k["smoothability_bound"] == 6, "smoothable");
    return "codim " + k["codimension"].dump() + ", d " + k["dimension"].dump() + ", point " +
           k["singular_points"][0].get<std::string>() + ", smoothable " + k["germ_ambient_dim"].dump() + " < " +
           k["smoothability_bound"].dump();
}

std::string criterion_4(Check& c) {
    int cases = 0;
    for (long long mu = 0; mu <= kMaxMu; ++mu) {
        c.expect(defect(record(2, mu)) == 1 + mu, "d=2 mu=" + std::to_string(mu));
        c.expect(defect(record(3, mu)) == mu, "d=3 mu=" + std::to_string(mu));
        cases += 2;
    }
    for (long long chi = -kMaxMu; chi <= kMaxMu; ++chi) {
        SingularPointRecord r;
        r.point = Point::coordinate(7, 6);
        r.type = {2, 3, 2};
        r.d = 4;
        r.smoothable = smoothable(r.type, 6);
        r.chi_smoothing = chi;
        r.chi_lower_stratum = 1;
        c.expect(!r.smoothable, "configuration should be nonsmoothable");
        c.expect(defect(r) == chi + 2, "P6 chi=" + std::to_string(chi));
        ++cases;
    }
    return std::to_string(cases) + " cases";
}

std::string criterion_5(Check& c) {
    std::mt19937 rng(50);
    auto draw = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    int correct = 0;
    for (int k = 0; k < kLeGreuelInstances; ++k) {
        topo::MilnorData m;
        m.d = (k % 3 == 0) ? 2 : 3;
        m.mu = draw(0, 40);
        m.mu_slice = draw(0, 40);
        long long b2 = 1;
        if (k % 3 == 2) {  // explicit b2; otherwise the default b2 = 1
            b2 = draw(0, 5);
            m.b2 = b2;
        }
        long long truth = *m.mu_slice + m.mu + (m.d == 3 ? b2 : 0);
        bool satisfy = k % 2 == 0;
        long long offset = satisfy ? 0 : (draw(0, 1) ? 1 : -1) * draw(1, 7);
        m.polar_multiplicity = truth + offset;
        auto r = topo::le_greuel_check(m);
        bool ok = satisfy ? std::holds_alternative<topo::Holds>(r)
                          : std::holds_alternative<topo::Violated>(r) &&
                                std::get<topo::Violated>(r).lhs == truth + offset &&
                                std::get<topo::Violated>(r).rhs == truth;
        c.expect(ok, "instance " + std::to_string(k));
        correct += ok;
    }
    return std::to_string(correct) + "/" + std::to_string(kLeGreuelInstances) + " classified correctly";
}

std::string criterion_6(Check& c) {
    auto start = Clock::now();
    VariableList xy{"x", "y"};
    VariableList xyz{"x", "y", "z"};
    std::vector<Ideal> corpus;
    {
        auto in = cli::load_input(fixture("staircase_form.json"));
        Ideal form(in.variables);
        for (const auto& s : in.form_coefficients) form.add(parse_polynomial(s, in.variables));
        corpus.push_back(form);
    }
    corpus.push_back(ideal_of(xy, {"x", "y"}));
    corpus.push_back(ideal_of(xy, {"x^2 - 1", "y^2 - x"}));
    corpus.push_back(ideal_of(xy, {"x^2 + y^2 - 5", "x*y - 2"}));
    corpus.push_back(ideal_of(xy, {"x*y", "x^2 + y^2 - 1"}));
    corpus.push_back(ideal_of(xy, {"x^3", "y^2", "x*y"}));
    corpus.push_back(ideal_of(xy, {"x^3 - y", "y^2 - 1"}));
    corpus.push_back(ideal_of(xy, {"x^2 - y^3", "y"}));
    corpus.push_back(ideal_of(xyz, {"x^2", "y^2", "z^2"}));
    corpus.push_back(ideal_of(xyz, {"x + y + z", "x*y + y*z + x*z", "x*y*z"}));
    corpus.push_back(ideal_of(xyz, {"x^2 - y*z", "y^2 - 1", "z^2 - x"}));

    int zero_dim = 0;
    for (const auto& I : corpus) {
        const auto n = I.nvars();
        auto gb = buchberger(I, MonomialOrder::degrevlex(n));
        c.expect(oracle::all_s_polynomials_reduce(gb.polynomials(), oracle::Order::degrevlex), "S-pair check");
        auto ours = quotient_dimension(gb);
        c.expect(ours.has_value() && *ours <= kMaxQuotientDimension, "corpus ideal must be zero-dimensional");
        if (!ours) continue;
        c.expect(oracle::quotient_dimension(I) == ours, "quotient dimension differs from the oracle");
        ++zero_dim;
    }

    auto v = VariableList{"x0", "x1", "x2", "x3"};
    auto tc = ideal_of(v, {"x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"});
    auto gb = buchberger(tc, MonomialOrder::degrevlex(4));
    c.expect(oracle::all_s_polynomials_reduce(gb.polynomials(), oracle::Order::degrevlex), "twisted cubic S-pairs");
    c.expect(dimension_from_basis(gb) == 2, "twisted cubic dimension");
    bool same = gb.size() == 3;
    for (const auto& g : tc.generators()) {
        bool found = false;
        for (const auto& b : gb.polynomials()) found = found || b == g || b == -g;
        same = same && found;
    }
    c.expect(same, "twisted cubic minors are not the reduced basis");
    double secs = seconds_since(start);
    c.expect(secs < kGrobnerSuiteSeconds, "runtime");
    std::ostringstream s;
    s << zero_dim << " zero-dimensional ideals, twisted cubic dim " << dimension_from_basis(gb) << ", " << secs << " s";
    return s.str();
}

std::string criterion_7(Check& c) {
    int bouquets = 0;
    std::vector<unsigned> dims;
    std::function<void(unsigned)> walk = [&](unsigned min_dim) {
        topo::BouquetDescriptor b{dims};
        c.expect(topo::chi_bouquet(b) == topo::chi_cw(topo::cw_model(b)), "bouquet");
        ++bouquets;
        if (dims.size() == 6) return;
        for (unsigned k = min_dim; k <= 4; ++k) {
            dims.push_back(k);
            walk(k);
            dims.pop_back();
        }
    };
    walk(1);
    for (long long mu = 0; mu <= kMaxMuBouquet; ++mu) {
        topo::MilnorData m;
        m.mu = mu;
        m.d = 2;
        c.expect(topo::chi_smoothing(m) == topo::chi_bouquet({std::vector<unsigned>(static_cast<std::size_t>(mu), 2)}),
                 "d=2 mu=" + std::to_string(mu));
        m.d = 3;
        topo::BouquetDescriptor b{{2}};
        b.sphere_dimensions.insert(b.sphere_dimensions.end(), static_cast<std::size_t>(mu), 3);
        c.expect(topo::chi_smoothing(m) == topo::chi_bouquet(b), "d=3 mu=" + std::to_string(mu));
    }
    return std::to_string(bouquets) + " bouquets, mu 0.." + std::to_string(kMaxMuBouquet);
}

std::string criterion_8(Check& c) {
    int cases = 0;
    for (int d : {2, 3})
        for (long long mu = 0; mu <= kMaxMuBouquet; ++mu) {
            auto rec = record(d, mu);
            long long rad = radial_from_decomposition({});
            c.expect(rad == 1, "radial index");
            auto chi = resolve_chi_smoothing(rec);
            c.expect(chi.has_value(), "chi of smoothing");
            if (!chi) continue;
            c.expect(phn_from_radial(rad, d, *chi) == defect(rec),
                     "d=" + std::to_string(d) + " mu=" + std::to_string(mu));
            ++cases;
        }
    return std::to_string(cases) + " cases";
}

}  // namespace

int main() {
    report(1, "twisted cubic end-to-end verify", criterion_1);
    report(2, "index recovery in both directions", criterion_2);
    report(3, "twisted cubic classification", criterion_3);
    report(4, "defect formula properties", criterion_4);
    report(5, "polar multiplicity identity checker", criterion_5);
    report(6, "Groebner kernel oracle equivalence", criterion_6);
    report(7, "Euler characteristic oracle", criterion_7);
    report(8, "radial form special case", criterion_8);
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed;
}
