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

#include "bol/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "bol/error.hpp"
#include "json.hpp"

namespace bol {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& msg) {
    throw Error(ErrorKind::Parse, field.empty() ? msg : field + ": " + msg);
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        fail("", std::string("invalid JSON (") + e.what() + ")");
    }
}

void check_keys(const json& doc, const std::set<std::string>& allowed) {
    if (!doc.is_object()) fail("", "top-level value must be an object");
    for (const auto& [key, value] : doc.items())
        if (!allowed.count(key)) fail(key, "unknown field");
}

std::size_t read_index(const json& v, const std::string& field, std::size_t bound) {
    if (!v.is_number_integer()) fail(field, "index must be an integer");
    if (v.is_number_unsigned()) {
        const auto u = v.get<std::uint64_t>();
        if (u < bound) return static_cast<std::size_t>(u);
        fail(field, "index " + std::to_string(u) + " out of range (dim " + std::to_string(bound) + ")");
    }
    fail(field, "index " + std::to_string(v.get<std::int64_t>()) + " out of range (dim " + std::to_string(bound) + ")");
}

Scalar read_scalar(const json& v, const std::string& field) {
    if (v.is_string()) {
        try {
            return parse_scalar(v.get<std::string>());
        } catch (const Error& e) {
            fail(field, e.what());
        }
    }
    if (v.is_number_integer()) return parse_scalar(v.dump());
    fail(field, "scalar must be a string \"p\" or \"p/q\"");
}

std::size_t read_dim(const json& doc) {
    if (!doc.contains("dim")) fail("dim", "missing");
    const json& d = doc["dim"];
    if (!d.is_number_unsigned()) fail("dim", "must be a non-negative integer");
    const auto n = d.get<std::uint64_t>();
    if (n > 64) fail("dim", "too large (" + std::to_string(n) + ")");
    return static_cast<std::size_t>(n);
}

std::string read_name(const json& doc) {
    if (!doc.contains("name")) return {};
    if (!doc["name"].is_string()) fail("name", "must be a string");
    return doc["name"].get<std::string>();
}

std::vector<std::string> read_basis(const json& doc, std::size_t n) {
    std::vector<std::string> labels;
    if (!doc.contains("basis")) return labels;
    const json& b = doc["basis"];
    if (!b.is_array()) fail("basis", "must be an array of strings");
    if (b.size() != n) fail("basis", "has " + std::to_string(b.size()) + " labels, dim is " + std::to_string(n));
    std::set<std::string> seen;
    for (std::size_t i = 0; i < b.size(); ++i) {
        const std::string f = "basis[" + std::to_string(i) + "]";
        if (!b[i].is_string()) fail(f, "must be a string");
        if (!seen.insert(b[i].get<std::string>()).second) fail(f, "duplicate label");
        labels.push_back(b[i].get<std::string>());
    }
    return labels;
}

/// Sparse entries of `arity` indices followed by a scalar. The first two
/// indices must satisfy i < j; the same index tuple may not appear twice.
template <typename Sink>
void read_entries(const json& doc, const std::string& key, std::size_t arity, std::size_t n, Sink sink) {
    if (!doc.contains(key)) return;
    const json& arr = doc[key];
    if (!arr.is_array()) fail(key, "must be an array");
    std::set<std::vector<std::size_t>> seen;
    for (std::size_t e = 0; e < arr.size(); ++e) {
        const std::string f = key + "[" + std::to_string(e) + "]";
        const json& entry = arr[e];
        if (!entry.is_array() || entry.size() != arity + 1)
            fail(f, "entry must be [" + std::string(arity == 3 ? "i, j, k" : "i, j, k, l") + ", \"p/q\"]");
        std::vector<std::size_t> idx;
        for (std::size_t a = 0; a < arity; ++a)
            idx.push_back(read_index(entry[a], f + "[" + std::to_string(a) + "]", n));
        if (idx[0] >= idx[1]) fail(f, "requires i < j (the (j, i) entry is implied)");
        const Scalar v = read_scalar(entry[arity], f + "[" + std::to_string(arity) + "]");
        if (!seen.insert(idx).second) fail(f, "duplicate entry");
        sink(idx, v);
    }
}

std::string quoted(const std::string& s) { return json(s).dump(); }
std::string qs(const Scalar& s) { return "\"" + format_scalar(s) + "\""; }

/// `  "key": [` lines `  ]` with a trailing comma unless last.
void emit_lines(std::ostringstream& out, const std::string& key, const std::vector<std::string>& lines, bool last) {
    out << "  " << quoted(key) << ": [";
    if (lines.empty()) {
        out << "]";
    } else {
        out << "\n";
        for (std::size_t i = 0; i < lines.size(); ++i)
            out << "    " << lines[i] << (i + 1 < lines.size() ? "," : "") << "\n";
        out << "  ]";
    }
    out << (last ? "\n" : ",\n");
}

std::string label_list(const std::vector<std::string>& labels) {
    std::string s = "[";
    for (std::size_t i = 0; i < labels.size(); ++i) s += (i ? ", " : "") + quoted(labels[i]);
    return s + "]";
}

std::vector<std::string> bracket_lines(const LieAlgebra& L) {
    std::vector<std::string> lines;
    const std::size_t m = L.dim();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k)
                if (sgn(L.C(i, j, k)) != 0)
                    lines.push_back("[" + std::to_string(i) + ", " + std::to_string(j) + ", " + std::to_string(k) +
                                    ", " + qs(L.C(i, j, k)) + "]");
    return lines;
}

std::string scalar_row(std::span<const Scalar> xs) {
    std::string s = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + qs(xs[i]);
    return s + "]";
}

std::string pair_line(const PairEndo& P) {
    const std::size_t n = P.comp.size();
    std::string s = "{\"comp\": " + scalar_row(P.comp.coords()) + ", \"pi\": [";
    for (std::size_t r = 0; r < n; ++r) s += (r ? ", " : "") + scalar_row(P.pi.data().subspan(r * n, n));
    return s + "]}";
}

std::string emit_lie_impl(const LieAlgebra& L, const EnvelopingLie* E) {
    std::ostringstream out;
    out << "{\n";
    if (E) out << "  \"b_dim\": " << E->b_dim << ",\n";
    out << "  \"basis\": " << label_list(L.labels()) << ",\n";
    emit_lines(out, "brackets", bracket_lines(L), false);
    out << "  \"dim\": " << L.dim() << ",\n";
    if (E) {
        std::vector<std::string> hs;
        for (const auto& P : E->h_basis) hs.push_back(pair_line(P));
        emit_lines(out, "h_basis", hs, false);
    }
    out << "  \"name\": " << quoted(L.name()) << "\n}\n";
    return out.str();
}

std::vector<Scalar> read_scalar_array(const json& v, const std::string& field, std::size_t len) {
    if (!v.is_array() || v.size() != len) fail(field, "must be an array of " + std::to_string(len) + " scalars");
    std::vector<Scalar> xs;
    for (std::size_t i = 0; i < len; ++i) xs.push_back(read_scalar(v[i], field + "[" + std::to_string(i) + "]"));
    return xs;
}

}  // namespace

BolAlgebra parse_bol(std::string_view text) {
    const json doc = parse_json(text);
    check_keys(doc, {"name", "dim", "basis", "binary", "ternary"});
    const std::size_t n = read_dim(doc);
    BolAlgebra B(n, read_basis(doc, n), read_name(doc));
    read_entries(doc, "binary", 3, n,
                 [&](const std::vector<std::size_t>& x, const Scalar& v) { B.set_binary(x[0], x[1], x[2], v); });
    read_entries(doc, "ternary", 4, n, [&](const std::vector<std::size_t>& x, const Scalar& v) {
        B.set_ternary(x[0], x[1], x[2], x[3], v);
    });
    return B;
}

std::string emit_bol(const BolAlgebra& B) {
    const std::size_t n = B.dim();
    std::vector<std::string> bin, ter;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                if (sgn(B.T(i, j, k)) != 0)
                    bin.push_back("[" + std::to_string(i) + ", " + std::to_string(j) + ", " + std::to_string(k) +
                                  ", " + qs(B.T(i, j, k)) + "]");
                for (std::size_t l = 0; l < n; ++l)
                    if (sgn(B.R(i, j, k, l)) != 0)
                        ter.push_back("[" + std::to_string(i) + ", " + std::to_string(j) + ", " +
                                      std::to_string(k) + ", " + std::to_string(l) + ", " + qs(B.R(i, j, k, l)) +
                                      "]");
            }
    std::ostringstream out;
    out << "{\n  \"basis\": " << label_list(B.labels()) << ",\n";
    emit_lines(out, "binary", bin, false);
    out << "  \"dim\": " << n << ",\n";
    out << "  \"name\": " << quoted(B.name()) << ",\n";
    emit_lines(out, "ternary", ter, true);
    out << "}\n";
    return out.str();
}

LieDocument parse_lie(std::string_view text) {
    const json doc = parse_json(text);
    check_keys(doc, {"name", "dim", "basis", "brackets", "b_dim", "h_basis"});
    const std::size_t m = read_dim(doc);
    LieDocument out;
    out.lie = LieAlgebra(m, read_basis(doc, m), read_name(doc));
    read_entries(doc, "brackets", 3, m,
                 [&](const std::vector<std::size_t>& x, const Scalar& v) { out.lie.set_bracket(x[0], x[1], x[2], v); });
    if (doc.contains("b_dim") != doc.contains("h_basis")) fail("b_dim", "b_dim and h_basis must appear together");
    if (!doc.contains("b_dim")) return out;
    const std::size_t n = read_index(doc["b_dim"], "b_dim", m + 1);
    const json& hb = doc["h_basis"];
    if (!hb.is_array()) fail("h_basis", "must be an array");
    if (n + hb.size() != m)
        fail("h_basis", "b_dim + " + std::to_string(hb.size()) + " elements != dim " + std::to_string(m));
    for (std::size_t t = 0; t < hb.size(); ++t) {
        const std::string f = "h_basis[" + std::to_string(t) + "]";
        const json& e = hb[t];
        if (!e.is_object() || e.size() != 2 || !e.contains("pi") || !e.contains("comp"))
            fail(f, "must be {\"comp\": [...], \"pi\": [[...], ...]}");
        PairEndo P = PairEndo::zero(n);
        const auto comp = read_scalar_array(e["comp"], f + ".comp", n);
        for (std::size_t i = 0; i < n; ++i) P.comp[i] = comp[i];
        const json& pi = e["pi"];
        if (!pi.is_array() || pi.size() != n) fail(f + ".pi", "must have " + std::to_string(n) + " rows");
        for (std::size_t r = 0; r < n; ++r) {
            const auto row = read_scalar_array(pi[r], f + ".pi[" + std::to_string(r) + "]", n);
            for (std::size_t c = 0; c < n; ++c) P.pi(r, c) = row[c];
        }
        out.h_basis.push_back(std::move(P));
    }
    out.b_dim = n;
    return out;
}

std::string emit_lie(const LieAlgebra& L) { return emit_lie_impl(L, nullptr); }

std::string emit_envelope(const EnvelopingLie& E) { return emit_lie_impl(E.lie, &E); }

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Parse, path + ": cannot open");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::Parse, path + ": cannot open for writing");
    out << text;
    if (!out) throw Error(ErrorKind::Parse, path + ": write failed");
}

}  // namespace bol
