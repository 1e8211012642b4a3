#pragma once

#include "phdet/cli/input.hpp"
#include "phdet/detvar/classify.hpp"
#include "phdet/indexcalc/cstar.hpp"
#include "phdet/indexcalc/ledger.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <ostream>
#include <string>
#include <vector>

namespace phdet::cli {

using Report = nlohmann::ordered_json;

/// Process exit codes.
enum ExitCode : int { exit_ok = 0, exit_violated = 1, exit_input = 2, exit_unsupported = 3 };

struct Options {
    bool json = false;
    std::size_t spair_budget = BuchbergerOptions{}.spair_budget;
};

namespace detail {

inline Report classification_block(const DeterminantalModel& model, const GermClassification& c) {
    const auto ty = model.type();
    Report r;
    r["matrix_type"] = {{"n", ty.n}, {"p", ty.p}, {"t", ty.t}};
    r["ambient"] = {{"kind", model.is_projective() ? "projective" : "affine"}, {"dim", model.ambient().dim}};
    r["variety"] = c.empty ? "empty" : "nonempty";
    if (!c.empty) {
        r["codimension"] = c.codimension;
        r["dimension"] = c.dimension;
    }
    r["expected_codimension"] = c.expected_codimension;
    r["determinantal"] = c.determinantal;
    r["singular_locus_dimension"] = c.singular_locus_dimension;
    r["isolated_singularity"] = c.isolated_singularity;
    r["smoothable"] = c.smoothable;
    r["smoothability_bound"] = (ty.n - ty.t + 2) * (ty.p - ty.t + 2);
    r["germ_ambient_dim"] = model.germ_ambient_dim();
    Report pts = Report::array();
    for (const auto& p : c.singular_points) pts.push_back(p.to_string());
    r["singular_points"] = pts;
    r["singular_points_complete"] = c.singular_points_complete;
    r["local_gate"] = to_string(c.local_gate);
    return r;
}

struct Workbench {
    WorkbenchInput input;
    DeterminantalModel model;
    GermClassification classification;
    BuchbergerOptions groebner;
};

inline Workbench load(const std::string& path, const Options& opt) {
    WorkbenchInput in = load_input(path);
    DeterminantalModel model = build_model(in);
    BuchbergerOptions gb{opt.spair_budget};
    GermClassification c = classify(model, gb);
    return {std::move(in), std::move(model), std::move(c), gb};
}

struct LedgerBuild {
    IndexLedger ledger;
    std::vector<SingularPointRecord> records;
    std::vector<std::string> index_source;  // parallel to ledger.entries
};

inline std::optional<long long> known_index(const WorkbenchInput& in, const Point& p) {
    for (const auto& [q, v] : in.known_indices)
        if (q == p) return v;
    return std::nullopt;
}

inline LedgerBuild build_ledger(const Workbench& wb) {
    const auto& in = wb.input;
    const auto& model = wb.model;
    LedgerBuild out;

    for (const auto& s : in.singularities) {
        Point pt;
        try {
            pt = model.check_point(s.point);
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
        auto status = is_point_on_variety(model, pt);
        if (status.stratum != Stratum::essential_singular)
            throw InputError("singularity " + pt.to_string() + " is " + to_string(status.stratum) +
                             " (rank " + std::to_string(status.rank) + "), not an essential singular point of X");
        SingularPointRecord rec;
        rec.point = pt;
        rec.type = model.type();
        if (s.n) rec.type.n = *s.n;
        if (s.p) rec.type.p = *s.p;
        if (s.t) rec.type.t = *s.t;
        rec.d = s.d.value_or(wb.classification.dimension);
        rec.smoothable = s.smoothable.value_or(wb.classification.smoothable);
        rec.mu = s.mu;
        rec.chi_smoothing = s.chi_smoothing;
        rec.chi_lower_stratum = s.chi_lower_stratum;
        out.records.push_back(rec);
        auto idx = known_index(in, pt);
        out.ledger.entries.push_back({pt, PointRole::variety_singularity, idx});
        out.index_source.push_back(idx ? "known" : "unknown");
    }
    if (wb.classification.singular_points_complete) {
        for (const auto& sp : wb.classification.singular_points) {
            if (out.ledger.find(sp) == nullptr)
                throw InputError("singular point " + sp.to_string() + " of X has no entry in singularities");
        }
    }

    const bool cstar = in.form == FormKind::cstar || (in.form == FormKind::none && in.weights);
    if (cstar) {
        if (!in.weights) throw InputError("form kind cstar needs weights");
        std::vector<FixedPoint> fixed;
        try {
            fixed = cstar_fixed_points(model, *in.weights);
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
        for (const auto& fp : fixed) {
            if (fp.stratum == Stratum::essential_singular) {
                if (out.ledger.find(fp.point) == nullptr)
                    throw InputError("fixed point " + fp.point.to_string() + " is singular but has no singularities entry");
                continue;
            }
            auto idx = known_index(in, fp.point);
            out.ledger.entries.push_back({fp.point, PointRole::form_singularity_smooth_point,
                                          idx ? *idx : cstar_smooth_index(fp.point, *in.weights, model)});
            out.index_source.push_back(idx ? "known" : "cstar_smooth_index");
        }
        for (const auto& [p, v] : in.known_indices)
            if (out.ledger.find(p) == nullptr)
                throw InputError("known index at " + p.to_string() + " is not a fixed point of the C*-action");
    } else {
        for (const auto& [p, v] : in.known_indices) {
            if (out.ledger.find(p) != nullptr) continue;
            Point pt;
            try {
                pt = model.check_point(p);
            } catch (const std::invalid_argument& e) {
                throw InputError(e.what());
            }
            auto status = is_point_on_variety(model, pt);
            if (status.stratum != Stratum::smooth_stratum)
                throw InputError("form singularity " + pt.to_string() + " is " + to_string(status.stratum));
            out.ledger.entries.push_back({pt, PointRole::form_singularity_smooth_point, v});
            out.index_source.push_back("known");
        }
    }
    out.ledger.chi_x = in.chi_x;
    return out;
}

inline Report ledger_block(const LedgerBuild& lb, const IdentityResult* result) {
    Report r;
    Report entries = Report::array();
    for (std::size_t i = 0; i < lb.ledger.entries.size(); ++i) {
        const auto& e = lb.ledger.entries[i];
        Report item;
        item["point"] = e.point.to_string();
        item["role"] = to_string(e.role);
        std::string source = lb.index_source[i];
        std::optional<long long> idx = e.index;
        if (!idx && result) {
            if (auto* s = std::get_if<IdentitySolved>(result);
                s && s->unknown.kind == UnknownKind::index && *s->unknown.point == e.point) {
                idx = s->value;
                source = "solved";
            }
        }
        item["index"] = idx ? Report(*idx) : Report(nullptr);
        item["index_source"] = source;
        entries.push_back(item);
    }
    r["entries"] = entries;
    if (lb.ledger.chi_x) {
        r["chi_X"] = *lb.ledger.chi_x;
    } else if (auto* s = result ? std::get_if<IdentitySolved>(result) : nullptr;
               s && s->unknown.kind == UnknownKind::chi_x) {
        r["chi_X"] = s->value;
    } else {
        r["chi_X"] = nullptr;
    }
    Report defects = Report::array();
    for (const auto& rec : lb.records) {
        Report d;
        d["point"] = rec.point.to_string();
        d["d"] = rec.d;
        d["smoothable"] = rec.smoothable;
        d["mu"] = rec.mu ? Report(*rec.mu) : Report(nullptr);
        auto chi = resolve_chi_smoothing(rec);
        d["chi_smoothing"] = chi ? Report(*chi) : Report(nullptr);
        if (!rec.smoothable) d["chi_lower_stratum"] = rec.chi_lower_stratum ? Report(*rec.chi_lower_stratum) : Report(nullptr);
        std::optional<long long> value;
        if (chi && (rec.smoothable || rec.chi_lower_stratum)) value = defect(rec);
        d["defect"] = value ? Report(value.value()) : Report(nullptr);
        defects.push_back(d);
    }
    r["defects"] = defects;
    return r;
}

inline std::string identity_summary(const LedgerBuild& lb, const IdentityResult& result) {
    auto solved = std::get_if<IdentitySolved>(&result);
    std::string lhs, rhs;
    for (const auto& e : lb.ledger.entries) {
        long long v = e.index ? *e.index : (solved ? solved->value : 0);
        lhs += (lhs.empty() ? "" : " + ") + std::to_string(v);
    }
    if (lhs.empty()) lhs = "0";
    long long chi = lb.ledger.chi_x ? *lb.ledger.chi_x : (solved ? solved->value : 0);
    rhs = std::to_string(chi);
    for (auto rec : lb.records) {
        if (solved && solved->unknown.point && rec.point == *solved->unknown.point) {
            if (solved->unknown.kind == UnknownKind::mu) rec.mu = solved->value;
            if (solved->unknown.kind == UnknownKind::chi_smoothing) rec.chi_smoothing = solved->value;
        }
        rhs += " + " + std::to_string(defect(rec));
    }
    return lhs + " = " + rhs;
}

inline Report identity_block(const LedgerBuild& lb, const IdentityResult& result) {
    Report r;
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, IdentityVerified>) {
                r["status"] = "verified";
            } else if constexpr (std::is_same_v<T, IdentityViolated>) {
                r["status"] = "violated";
            } else {
                r["status"] = "solved";
                r["unknown"] = v.unknown.name();
                r["value"] = v.value;
            }
            r["lhs"] = v.lhs;
            r["rhs"] = v.rhs;
        },
        result);
    r["summary"] = identity_summary(lb, result);
    return r;
}

inline int exit_for(const IdentityResult& r) {
    return std::holds_alternative<IdentityViolated>(r) ? exit_violated : exit_ok;
}

}  // namespace detail

// Each command fills `report` and returns the exit code. Errors propagate as
// exceptions and are mapped to exit codes by run().

inline int cmd_analyze(const std::string& path, const Options& opt, Report& report) {
    auto wb = detail::load(path, opt);
    report["classification"] = detail::classification_block(wb.model, wb.classification);
    if (wb.classification.local_gate == LocalGate::failed)
        throw UnsupportedError("germ at a singular point is not quasi-homogeneous; local symbolic analysis unsupported");
    return exit_ok;
}

inline int cmd_verify(const std::string& path, const Options& opt, Report& report) {
    auto wb = detail::load(path, opt);
    report["classification"] = detail::classification_block(wb.model, wb.classification);
    auto lb = detail::build_ledger(wb);
    IdentityResult result = global_identity(lb.ledger, lb.records);
    report["ledger"] = detail::ledger_block(lb, &result);
    report["identity"] = detail::identity_block(lb, result);
    return detail::exit_for(result);
}

inline int cmd_euler(const std::string& path, const Options& opt, Report& report) {
    auto wb = detail::load(path, opt);
    if (wb.input.chi_x) throw InputError("euler solves for chi_X; remove known.chi_X (or use verify)");
    report["classification"] = detail::classification_block(wb.model, wb.classification);
    auto lb = detail::build_ledger(wb);
    IdentityResult result = global_identity(lb.ledger, lb.records);
    report["ledger"] = detail::ledger_block(lb, &result);
    report["identity"] = detail::identity_block(lb, result);
    return exit_ok;
}

inline int cmd_index(const std::string& path, const std::string& at, const Options& opt, Report& report) {
    auto wb = detail::load(path, opt);
    Point target;
    try {
        target = wb.model.check_point(Point::parse(at));
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("--at: ") + e.what());
    }
    report["classification"] = detail::classification_block(wb.model, wb.classification);
    auto lb = detail::build_ledger(wb);
    LedgerEntry* entry = lb.ledger.find(target);
    if (entry == nullptr) {
        auto status = is_point_on_variety(wb.model, target);
        throw InputError(target.to_string() + " is not a singular point of the form (" + to_string(status.stratum) + ")");
    }
    const std::size_t pos = static_cast<std::size_t>(entry - lb.ledger.entries.data());
    if (entry->role == PointRole::form_singularity_smooth_point && wb.input.weights &&
        wb.input.form != FormKind::explicit_coefficients) {
        long long v = cstar_smooth_index(target, *wb.input.weights, wb.model);
        report["ledger"] = detail::ledger_block(lb, nullptr);
        report["identity"] = {{"status", "solved"}, {"unknown", "index@" + target.to_string()}, {"value", v},
                              {"method", "cstar_smooth_index"}};
        return exit_ok;
    }
    entry->index.reset();
    lb.index_source[pos] = "unknown";
    IdentityResult result = global_identity(lb.ledger, lb.records);
    report["ledger"] = detail::ledger_block(lb, &result);
    report["identity"] = detail::identity_block(lb, result);
    return exit_ok;
}

inline int cmd_groebner(const std::string& path, const std::string& which, const Options& opt, Report& report) {
    WorkbenchInput in = load_input(path);
    DeterminantalModel model = build_model(in);
    BuchbergerOptions gb_opt{opt.spair_budget};
    Ideal ideal(model.variables());
    if (which == "minors") {
        ideal = minors_ideal(model, model.t());
    } else if (which == "lower") {
        ideal = model.t() == 1 ? Ideal(model.variables(), {Polynomial::constant(model.variables(), 1)})
                               : minors_ideal(model, model.t() - 1) + minors_ideal(model, model.t());
    } else if (which == "form") {
        if (in.form != FormKind::explicit_coefficients) throw InputError("--ideal form needs an explicit form");
        for (std::size_t i = 0; i < in.form_coefficients.size(); ++i)
            ideal.add(parse_field(in.form_coefficients[i], in.variables, "form.coefficients[" + std::to_string(i) + "]"));
    } else {
        throw InputError("--ideal must be one of minors, lower, form");
    }
    const auto order = MonomialOrder::degrevlex(model.variables().size());
    GroebnerBasis gb = buchberger(ideal, order, gb_opt);
    Report basis = Report::array();
    for (const auto& g : gb.polynomials()) basis.push_back(g.to_string());
    report["ideal"] = which;
    report["order"] = order.name();
    report["basis"] = basis;
    const int dim = dimension_from_basis(gb);
    report["affine_dimension"] = dim;
    if (model.is_projective() && which != "form") report["projective_dimension"] = std::max(dim - 1, -1);
    auto q = quotient_dimension(gb);
    report["quotient_dimension"] = q ? Report(*q) : Report("infinite");
    return exit_ok;
}

namespace detail {

inline void render_text(const Report& node, std::ostream& out, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    auto scalar = [](const Report& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    for (const auto& [key, value] : node.items()) {
        if (value.is_object()) {
            out << pad << key << ":\n";
            render_text(value, out, indent + 2);
        } else if (value.is_array()) {
            bool all_scalar = true;
            for (const auto& v : value) all_scalar = all_scalar && !v.is_structured();
            if (all_scalar) {
                out << pad << key << ": [";
                for (std::size_t i = 0; i < value.size(); ++i) out << (i ? ", " : "") << scalar(value[i]);
                out << "]\n";
            } else {
                out << pad << key << ":\n";
                for (const auto& v : value) {
                    out << pad << "  -\n";
                    render_text(v, out, indent + 4);
                }
            }
        } else {
            out << pad << key << ": " << scalar(value) << "\n";
        }
    }
}

}  // namespace detail

/// Entry point shared by the executable and the tests.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Poincare-Hopf index workbench for isolated determinantal singularities", "phdet"};
    app.fallthrough();
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.json, "Print a machine-readable JSON report");
    app.add_option("--spair-budget", opt.spair_budget, "Maximum S-polynomial reductions per Groebner basis")
        ->check(CLI::PositiveNumber);

    std::string file, at, which;
    auto* analyze = app.add_subcommand("analyze", "Classify the determinantal model");
    auto* verify = app.add_subcommand("verify", "Check the global index identity");
    auto* euler = app.add_subcommand("euler", "Solve the identity for chi(X)");
    auto* index = app.add_subcommand("index", "Solve the identity for the index at one point");
    auto* groebner = app.add_subcommand("groebner", "Print a reduced Groebner basis");
    for (auto* sub : {analyze, verify, euler, index, groebner})
        sub->add_option("file", file, "Workbench input (JSON)")->required();
    index->add_option("--at", at, "Point, e.g. [0:0:0:0:1]")->required();
    groebner->add_option("--ideal", which, "minors | lower | form")->required()->check(
        CLI::IsMember({"minors", "lower", "form"}));

    std::vector<std::string> storage = args;
    storage.insert(storage.begin(), "phdet");
    std::vector<char*> argv;
    for (auto& s : storage) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_input;
    }

    std::string command = app.get_subcommands().front()->get_name();
    Report report;
    report["command"] = command;
    report["input"] = file;
    int code = exit_ok;
    std::string error_kind, error_message;
    std::optional<std::size_t> error_position;
    const auto start = std::chrono::steady_clock::now();
    try {
        if (command == "analyze") code = cmd_analyze(file, opt, report);
        else if (command == "verify") code = cmd_verify(file, opt, report);
        else if (command == "euler") code = cmd_euler(file, opt, report);
        else if (command == "index") code = cmd_index(file, at, opt, report);
        else code = cmd_groebner(file, which, opt, report);
    } catch (const ParseError& e) {
        code = exit_input, error_kind = "parse", error_message = e.what(), error_position = e.position();
    } catch (const InputError& e) {
        code = exit_input, error_kind = "input", error_message = e.what();
    } catch (const LedgerError& e) {
        code = e.kind() == LedgerError::Kind::too_many_unknowns ? exit_unsupported : exit_input;
        error_kind = "ledger", error_message = e.what();
    } catch (const UnsupportedError& e) {
        code = exit_unsupported, error_kind = "unsupported", error_message = e.what();
    } catch (const ResourceError& e) {
        code = exit_unsupported, error_kind = "resource", error_message = e.what();
    } catch (const std::invalid_argument& e) {
        code = exit_input, error_kind = "input", error_message = e.what();
    } catch (const std::out_of_range& e) {
        code = exit_input, error_kind = "input", error_message = e.what();
    } catch (const std::domain_error& e) {
        code = exit_unsupported, error_kind = "unsupported", error_message = e.what();
    }
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);

    if (!error_kind.empty()) {
        Report e;
        e["kind"] = error_kind;
        e["message"] = error_message;
        if (error_position) e["position"] = *error_position;
        report["error"] = e;
        err << "error: " << error_message << "\n";
    }
    report["exit_code"] = code;
    if (opt.json) out << report.dump(2) << "\n";
    else detail::render_text(report, out, 0);
    err << "elapsed: " << elapsed.count() << " ms\n";
    return code;
}

}  // namespace phdet::cli
