/*
   Copyright 2026 The bolalg Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "cli.hpp"

#include <filesystem>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bol/algebra.hpp"
#include "bol/catalog.hpp"
#include "bol/decompose.hpp"
#include "bol/envelope.hpp"
#include "bol/error.hpp"
#include "bol/forms.hpp"
#include "bol/io.hpp"
#include "bol/lie.hpp"
#include "bol/series.hpp"
#include "json.hpp"

namespace bol::cli {

namespace {

using nlohmann::json;

struct Options {
    std::string file;
    std::string name;
    std::string emit;
    bool as_json = false;
    std::uint64_t seed = SimplicityOptions{}.seed;
    std::string form = "env";
    std::string invariance = "skew";
    std::string ideal_mode = "def2";
};

// ---- rendering ----------------------------------------------------------

std::string fmt(const Vec& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + format_scalar(v[i]);
    return s + "]";
}

std::string fmt(const std::vector<std::size_t>& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? ", " : "") + std::to_string(t[i]);
    return s + ")";
}

const char* yn(bool b) { return b ? "yes" : "no"; }

json to_json(const Vec& v) {
    json a = json::array();
    for (const auto& x : v.coords()) a.push_back(format_scalar(x));
    return a;
}

json to_json(const Mat& m) {
    json a = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(to_json(m.row(r)));
    return a;
}

json to_json(const Subspace& s) {
    json a = json::array();
    for (const auto& v : s.basis()) a.push_back(to_json(v));
    return a;
}

json witness_json(const std::optional<std::vector<std::size_t>>& w) { return w ? json(*w) : json(nullptr); }

void print_basis(std::ostream& out, const std::string& indent, const Subspace& s) {
    if (s.is_zero()) out << indent << "(zero)\n";
    for (const auto& v : s.basis()) out << indent << fmt(v) << "\n";
}

void print_matrix(std::ostream& out, const std::string& indent, const Mat& m) {
    for (std::size_t r = 0; r < m.rows(); ++r) out << indent << fmt(m.row(r)) << "\n";
}

// ---- shared steps -------------------------------------------------------

BolAlgebra load(const std::string& path) {
    BolAlgebra B = parse_bol(read_text_file(path));
    if (B.name().empty()) B.set_name(std::filesystem::path(path).stem().string());
    return B;
}

json axioms_json(const AxiomReport& rep) {
    json ids = json::array();
    for (const auto& s : rep.identities) {
        json w = nullptr;
        if (s.witness) w = {{"tuple", s.witness->tuple}, {"defect", to_json(s.witness->defect)}};
        ids.push_back({{"id", s.id}, {"identity", s.description}, {"pass", s.pass}, {"failures", s.failures},
                       {"witness", w}});
    }
    return {{"pass", rep.pass()}, {"identities", ids}};
}

void print_axioms(std::ostream& out, const AxiomReport& rep) {
    for (const auto& s : rep.identities) {
        out << s.id << " " << (s.pass ? "pass" : "FAIL") << "  " << s.description << "\n";
        if (!s.pass) {
            out << "   failures: " << s.failures << "\n";
            if (s.witness) out << "   witness " << fmt(s.witness->tuple) << " defect " << fmt(s.witness->defect) << "\n";
        }
    }
}

/// Returns kOk if B passes the axioms, otherwise prints the report and
/// returns kFailed.
int require_bol(const BolAlgebra& B, std::ostream& out, std::ostream& err) {
    const AxiomReport rep = check_axioms(B);
    if (rep.pass()) return kOk;
    err << B.name() << ": not a Bol algebra\n";
    print_axioms(out, rep);
    return kFailed;
}

BilinearForm pick_form(const BolAlgebra& B, const std::string& which) {
    return which == "prop1" ? killing_ricci_prop1(B) : killing_ricci_env(B);
}

InvarianceVariant pick_variant(const std::string& which) {
    return which == "paper" ? InvarianceVariant::Paper : InvarianceVariant::Skew;
}

IdealMode pick_mode(const std::string& which) { return which == "def3" ? IdealMode::Def3 : IdealMode::Def2; }

// ---- commands -----------------------------------------------------------

int cmd_check(const Options& o, std::ostream& out, std::ostream&) {
    const BolAlgebra B = load(o.file);
    const AxiomReport rep = check_axioms(B);
    if (o.as_json) {
        json j = axioms_json(rep);
        j["name"] = B.name();
        j["dim"] = B.dim();
        out << j.dump(2) << "\n";
    } else {
        out << B.name() << ": dim " << B.dim() << "\n";
        print_axioms(out, rep);
        out << (rep.pass() ? "Bol algebra\n" : "not a Bol algebra\n");
    }
    return rep.pass() ? kOk : kFailed;
}

json series_json(const SeriesResult& s) {
    json chain = json::array();
    for (const auto& t : s.chain) chain.push_back(to_json(t));
    return {{"chain", chain}, {"solvable", s.solvable}, {"length", s.chain.size()}};
}

int cmd_info(const Options& o, std::ostream& out, std::ostream& err) {
    const BolAlgebra B = load(o.file);
    if (int rc = require_bol(B, out, err)) return rc;
    const IdealMode mode = pick_mode(o.ideal_mode);
    const Subspace all = whole(B);
    const Subspace z = center(B);
    const SeriesResult bol_s = bol_derived_series(B, all);
    const SeriesResult lts_s = lts_derived_series(B, all);
    const KillingRicciComparison cmp = compare_killing_ricci(B);
    const std::size_t rank_p = rank(cmp.prop1), rank_e = rank(cmp.env);

    if (o.as_json) {
        json ideals = json::array();
        for (const auto& t : bol_s.chain) ideals.push_back(is_ideal(B, t, mode));
        json j = {{"name", B.name()},
                  {"dim", B.dim()},
                  {"basis", B.labels()},
                  {"center", to_json(z)},
                  {"center_is_ideal", is_ideal(B, z, mode)},
                  {"ideal_mode", o.ideal_mode},
                  {"bol_series", series_json(bol_s)},
                  {"bol_series_terms_are_ideals", ideals},
                  {"lts_series", series_json(lts_s)},
                  {"solvable", bol_s.solvable},
                  {"beta_prop1", to_json(cmp.prop1)},
                  {"beta_env", to_json(cmp.env)},
                  {"beta_equal", cmp.equal},
                  {"rank_beta_prop1", rank_p},
                  {"rank_beta_env", rank_e},
                  {"beta_env_nondegenerate", rank_e == B.dim()}};
        out << j.dump(2) << "\n";
        return kOk;
    }
    out << B.name() << ": dim " << B.dim() << "\n";
    out << "center (dim " << z.dim() << ", ideal under " << o.ideal_mode << ": " << yn(is_ideal(B, z, mode))
        << "):\n";
    print_basis(out, "  ", z);
    out << "bol derived series dims:";
    for (const auto& t : bol_s.chain) out << " " << t.dim();
    out << "\n";
    for (std::size_t i = 0; i < bol_s.chain.size(); ++i)
        out << "  W" << i << " ideal under " << o.ideal_mode << ": " << yn(is_ideal(B, bol_s.chain[i], mode)) << "\n";
    out << "lts derived series dims:";
    for (const auto& t : lts_s.chain) out << " " << t.dim();
    out << "\n";
    out << "solvable: " << (bol_s.solvable ? "true" : "false") << "\n";
    out << "beta_prop1 (rank " << rank_p << "):\n";
    print_matrix(out, "  ", cmp.prop1);
    out << "beta_env (rank " << rank_e << "):\n";
    print_matrix(out, "  ", cmp.env);
    out << "beta_prop1 = beta_env: " << yn(cmp.equal) << "\n";
    out << "beta_env nondegenerate: " << yn(rank_e == B.dim()) << "\n";
    return kOk;
}

json candidate_json(const CandidateCheck& c) {
    return {{"candidate", to_json(c.candidate)},
            {"computed", c.computed},
            {"ideal", c.is_ideal_ok},
            {"solvable", c.solvable_ok},
            {"quotient_semisimple", c.quotient_semisimple_ok},
            {"certified", c.certified()},
            {"note", c.note}};
}

void print_candidate(std::ostream& out, const char* label, const CandidateCheck& c) {
    out << label << ": ";
    if (!c.computed) {
        out << "not computed (" << c.note << ")\n";
        return;
    }
    out << "dim " << c.candidate.dim() << ", ideal " << yn(c.is_ideal_ok) << ", solvable " << yn(c.solvable_ok)
        << ", quotient semisimple " << yn(c.quotient_semisimple_ok) << (c.certified() ? ", certified" : "");
    if (!c.note.empty()) out << " (" << c.note << ")";
    out << "\n";
}

int cmd_radical(const Options& o, std::ostream& out, std::ostream& err) {
    const BolAlgebra B = load(o.file);
    if (int rc = require_bol(B, out, err)) return rc;
    const RadicalCertificate c = radical(B, pick_form(B, o.form));
    if (o.as_json) {
        json j = {{"name", B.name()},
                  {"decided", c.decided},
                  {"radical", c.decided ? to_json(c.radical) : json(nullptr)},
                  {"strategy", to_string(c.strategy)},
                  {"form", o.form},
                  {"certificate",
                   {{"ideal", c.is_ideal_ok}, {"solvable", c.solvable_ok}, {"quotient_semisimple", c.quotient_semisimple_ok}}},
                  {"form_orthogonal", candidate_json(c.form_orthogonal)},
                  {"envelope_intersection", candidate_json(c.envelope_intersection)}};
        out << j.dump(2) << "\n";
    } else {
        out << B.name() << ": ";
        if (c.decided) {
            out << "radical dim " << c.radical.dim() << " (strategy " << to_string(c.strategy) << ")\n";
            print_basis(out, "  ", c.radical);
            out << "certificate: ideal " << yn(c.is_ideal_ok) << ", solvable " << yn(c.solvable_ok)
                << ", quotient semisimple " << yn(c.quotient_semisimple_ok) << "\n";
        } else {
            out << "radical undecided\n";
        }
        print_candidate(out, ("form-orthogonal (beta_" + o.form + ")").c_str(), c.form_orthogonal);
        print_candidate(out, "envelope-intersection", c.envelope_intersection);
    }
    return c.decided ? kOk : kUndecided;
}

json theorem4_json(const Theorem4Report& r) {
    return {{"item1",
             {{"lie_solvable", r.item1.lie_solvable},
              {"beta_orthogonal", r.item1.beta_orthogonal},
              {"biconditional_holds", r.item1.biconditional_holds}}},
            {"item2",
             {{"lie_semisimple", r.item2.lie_semisimple},
              {"lie_simple", to_string(r.item2.lie_simple)},
              {"beta_nondegenerate", r.item2.beta_nondegenerate},
              {"biconditional_holds", r.item2.biconditional_holds}}},
            {"item3",
             {{"applicable", r.item3.applicable},
              {"note", r.item3.note},
              {"components", r.item3.components},
              {"decomposition_certified", r.item3.decomposition_certified},
              {"component_envelope_dims", r.item3.component_envelope_dims},
              {"envelope_dim", r.item3.envelope_dim},
              {"envelope_splits", r.item3.envelope_splits},
              {"B_equals_triple_span", r.item3.B_equals_triple_span}}}};
}

int cmd_envelope(const Options& o, std::ostream& out, std::ostream& err) {
    const BolAlgebra B = load(o.file);
    if (int rc = require_bol(B, out, err)) return rc;
    EnvelopingLie E = build_envelope(B);
    E.lie.set_name(B.name() + ".envelope");
    const EnvelopeVerification& v = E.verification;
    if (!v.pass()) {
        err << B.name() << ": envelope verification failed\n";
    } else if (!o.emit.empty()) {
        write_text_file(o.emit, emit_envelope(E));
    }
    const bool solvable = lie_is_solvable(E.lie);
    const bool semisimple = lie_is_semisimple(E.lie);
    const bool cartan = cartan_solvability_condition(E.lie);
    std::optional<Theorem4Report> t4;
    if (v.pass()) t4 = theorem4_report(B);

    if (o.as_json) {
        json j = {{"name", B.name()},
                  {"dim", E.lie.dim()},
                  {"b_dim", E.b_dim},
                  {"h_dim", E.h_dim()},
                  {"verification",
                   {{"jacobi", v.jacobi_ok},
                    {"projection", v.projection_ok},
                    {"recovery", v.recovery_ok},
                    {"jacobi_witness", witness_json(v.jacobi_witness)},
                    {"projection_witness", witness_json(v.projection_witness)},
                    {"recovery_witness", witness_json(v.recovery_witness)}}},
                  {"solvable", solvable},
                  {"semisimple", semisimple},
                  {"cartan_criterion", cartan},
                  {"killing", to_json(killing(E.lie).gram)},
                  {"theorem4", t4 ? theorem4_json(*t4) : json(nullptr)}};
        if (!o.emit.empty() && v.pass()) j["emitted"] = o.emit;
        out << j.dump(2) << "\n";
        return v.pass() ? kOk : kFailed;
    }
    out << B.name() << ": envelope dim " << E.lie.dim() << " (B " << E.b_dim << " + h " << E.h_dim() << ")\n";
    auto line = [&](const char* what, bool ok, const std::optional<std::vector<std::size_t>>& w) {
        out << "  " << what << ": " << (ok ? "pass" : "FAIL");
        if (w) out << " at " << fmt(*w);
        out << "\n";
    };
    line("jacobi", v.jacobi_ok, v.jacobi_witness);
    line("projection", v.projection_ok, v.projection_witness);
    line("recovery", v.recovery_ok, v.recovery_witness);
    out << "solvable=" << (solvable ? "true" : "false") << " semisimple=" << (semisimple ? "true" : "false")
        << " cartan-criterion=" << (cartan ? "true" : "false") << "\n";
    if (t4) {
        out << "item 1: lie solvable " << yn(t4->item1.lie_solvable) << ", beta(B,(B,B,B)) = 0 "
            << yn(t4->item1.beta_orthogonal) << ", biconditional " << yn(t4->item1.biconditional_holds) << "\n";
        out << "item 2: lie semisimple " << yn(t4->item2.lie_semisimple) << ", lie simple "
            << to_string(t4->item2.lie_simple) << ", beta nondegenerate " << yn(t4->item2.beta_nondegenerate)
            << ", biconditional " << yn(t4->item2.biconditional_holds) << "\n";
        const auto& i3 = t4->item3;
        out << "item 3: ";
        if (!i3.applicable) {
            out << "not applicable (" << i3.note << ")\n";
        } else {
            out << i3.components << " components, certified " << yn(i3.decomposition_certified)
                << ", envelope splits " << yn(i3.envelope_splits) << ", B = (B,B,B) " << yn(i3.B_equals_triple_span);
            if (!i3.note.empty()) out << " (" << i3.note << ")";
            out << "\n";
        }
    }
    if (!o.emit.empty() && v.pass()) out << "wrote " << o.emit << "\n";
    return v.pass() ? kOk : kFailed;
}

int cmd_decompose(const Options& o, std::ostream& out, std::ostream& err) {
    const BolAlgebra B = load(o.file);
    if (int rc = require_bol(B, out, err)) return rc;
    SimplicityOptions opts;
    opts.seed = o.seed;
    Decomposition d;
    try {
        d = decompose_semisimple(B, pick_form(B, o.form), pick_variant(o.invariance), opts);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::PreconditionViolation) throw;
        if (o.as_json)
            out << json{{"name", B.name()}, {"error", to_string(e.kind())}, {"message", e.what()}}.dump(2) << "\n";
        else
            err << B.name() << ": " << e.what() << "\n";
        return kFailed;
    }
    if (o.as_json) {
        json comps = json::array();
        for (std::size_t i = 0; i < d.components.size(); ++i)
            comps.push_back({{"embedding", to_json(d.embeddings[i])},
                             {"dim", d.embeddings[i].dim()},
                             {"simple", to_string(d.simple[i])}});
        json j = {{"name", B.name()},        {"form", o.form},
                  {"invariance", o.invariance}, {"seed", std::to_string(o.seed)},
                  {"components", comps},     {"orthogonality", d.orthogonality},
                  {"certified", d.certified}};
        out << j.dump(2) << "\n";
    } else {
        out << B.name() << ": " << d.components.size() << " components (form beta_" << o.form << ", invariance "
            << o.invariance << ", seed " << o.seed << ")\n";
        for (std::size_t i = 0; i < d.components.size(); ++i) {
            out << "component " << i << ": dim " << d.embeddings[i].dim() << ", simple " << to_string(d.simple[i])
                << "\n";
            print_basis(out, "  ", d.embeddings[i]);
        }
        out << "orthogonality:\n";
        for (const auto& row : d.orthogonality) {
            out << "  ";
            for (std::size_t k = 0; k < row.size(); ++k) out << (k ? " " : "") << (row[k] ? "0" : "*");
            out << "\n";
        }
        out << "certified: " << yn(d.certified) << "\n";
    }
    return d.certified ? kOk : kUndecided;
}

int cmd_examples(const Options& o, std::ostream& out, std::ostream&) {
    if (o.name.empty()) {
        if (o.emit.empty()) {
            for (const auto& n : catalog_names()) out << n << "\n";
            return kOk;
        }
        // Without a name --emit is a directory receiving every entry.
        std::filesystem::create_directories(o.emit);
        for (const auto& n : catalog_names()) {
            const std::string path = (std::filesystem::path(o.emit) / (n + ".json")).string();
            write_text_file(path, emit_bol(catalog(n)));
            out << "wrote " << path << "\n";
        }
        return kOk;
    }
    const std::string text = emit_bol(catalog(o.name));
    if (o.emit.empty()) {
        out << text;
    } else {
        write_text_file(o.emit, text);
        out << "wrote " << o.emit << "\n";
    }
    return kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations with Bol algebras given by structure constants", "bol"};
    app.require_subcommand(1);
    Options o;

    auto add_json = [&](CLI::App* c) { c->add_flag("--json", o.as_json, "Machine-readable output"); };
    auto add_file = [&](CLI::App* c) { c->add_option("file", o.file, "Algebra document (JSON)")->required(); };
    auto add_form = [&](CLI::App* c) {
        c->add_option("--form", o.form, "Bilinear form: env or prop1")
            ->check(CLI::IsMember({"env", "prop1"}))
            ->capture_default_str();
    };
    auto add_seed = [&](CLI::App* c) {
        c->add_option("--seed", o.seed, "Seed for the randomized simplicity search")->capture_default_str();
    };

    std::map<CLI::App*, int (*)(const Options&, std::ostream&, std::ostream&)> handlers;

    auto* check = app.add_subcommand("check", "Verify the Bol algebra identities");
    add_file(check);
    add_json(check);
    handlers[check] = cmd_check;

    auto* info = app.add_subcommand("info", "Center, derived series, solvability and forms");
    add_file(info);
    add_json(info);
    info->add_option("--ideal-mode", o.ideal_mode, "Ideal definition used in reports: def2 or def3")
        ->check(CLI::IsMember({"def2", "def3"}))
        ->capture_default_str();
    handlers[info] = cmd_info;

    auto* rad = app.add_subcommand("radical", "Certified radical");
    add_file(rad);
    add_json(rad);
    add_form(rad);
    handlers[rad] = cmd_radical;

    auto* env = app.add_subcommand("envelope", "Enveloping Lie algebra with verification");
    add_file(env);
    add_json(env);
    env->add_option("--emit", o.emit, "Write the Lie algebra document to PATH");
    handlers[env] = cmd_envelope;

    auto* dec = app.add_subcommand("decompose", "Split a semisimple algebra into simple ideals");
    add_file(dec);
    add_json(dec);
    add_form(dec);
    add_seed(dec);
    dec->add_option("--invariance", o.invariance, "Invariance convention: skew or paper")
        ->check(CLI::IsMember({"skew", "paper"}))
        ->capture_default_str();
    handlers[dec] = cmd_decompose;

    auto* ex = app.add_subcommand("examples", "List, print or write bundled examples");
    ex->add_option("name", o.name, "Catalog entry");
    ex->add_option("--emit", o.emit, "Output file (with a name) or directory (without)");
    handlers[ex] = cmd_examples;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kOk : kInput;
    }

    try {
        for (auto& [cmd, fn] : handlers)
            if (cmd->parsed()) return fn(o, out, err);
    } catch (const Error& e) {
        err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return e.kind() == ErrorKind::Parse || e.kind() == ErrorKind::UnknownName ? kInput : kFailed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kFailed;
    }
    return kInput;
}

}  // namespace bol::cli
