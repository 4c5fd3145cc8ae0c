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

#include <string>

#include "bol/envelope.hpp"
#include "bol/error.hpp"
#include "bol/io.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bol;
using bol::test::fixture;
using bol::test::full_catalog;

namespace {

std::string parse_error(const std::string& text) {
    try {
        parse_bol(text);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Parse);
        return e.what();
    }
    return {};
}

bool has(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_SUITE("io") {
    TEST_CASE("catalog documents round-trip byte-identically") {
        for (const auto& B : full_catalog()) {
            CAPTURE(B.name());
            const std::string text = emit_bol(B);
            const BolAlgebra back = parse_bol(text);
            CHECK(back == B);
            CHECK(back.labels() == B.labels());
            CHECK(back.name() == B.name());
            CHECK(emit_bol(back) == text);
        }
    }

    TEST_CASE("catalog documents match the golden files") {
        for (const auto& B : full_catalog()) {
            CAPTURE(B.name());
            CHECK(emit_bol(B) == read_text_file(fixture("golden/" + B.name() + ".json")));
        }
        for (const char* name : {"solv2", "sl2bol"}) {
            EnvelopingLie E = envelope(catalog(name));
            E.lie.set_name(std::string(name) + ".envelope");
            CHECK(emit_envelope(E) == read_text_file(fixture(std::string("golden/") + name + ".envelope.json")));
        }
    }

    TEST_CASE("canonical rendering") {
        BolAlgebra B(2, {"a", "b"}, "q");
        B.set_binary(0, 1, 1, Scalar(-3, 4));
        B.set_ternary(0, 1, 0, 1, Scalar(6, 3));
        const std::string text = emit_bol(B);
        CHECK(has(text, "[0, 1, 1, \"-3/4\"]"));
        CHECK(has(text, "[0, 1, 0, 1, \"2\"]"));
        CHECK_FALSE(has(text, "/1\""));
        CHECK_FALSE(has(text, "+"));
        CHECK(text.back() == '\n');
        // Entry order and spacing in the input do not matter.
        const BolAlgebra C = parse_bol(
            R"({"ternary":[[0,1,0,1,"2"]],"name":"q","dim":2,"binary":[[0,1,1,"-3/4"]],"basis":["a","b"]})");
        CHECK(emit_bol(C) == text);
    }

    TEST_CASE("defaults and integers") {
        const BolAlgebra B = parse_bol(R"({"dim": 2, "binary": [[0, 1, 0, 1]]})");
        CHECK(B.labels() == std::vector<std::string>{"e0", "e1"});
        CHECK(B.T(0, 1, 0) == 1);
        CHECK(B.T(1, 0, 0) == -1);
        CHECK(parse_bol(R"({"dim": 0})").dim() == 0);
    }

    TEST_CASE("diagnostics name the field") {
        CHECK(has(parse_error("{"), "invalid JSON"));
        CHECK(has(parse_error("[]"), "object"));
        CHECK(has(parse_error(R"({"name": "x"})"), "dim"));
        CHECK(has(parse_error(R"({"dim": -1})"), "dim"));
        CHECK(has(parse_error(R"({"dim": 2, "extra": 1})"), "extra: unknown field"));
        CHECK(has(parse_error(R"({"dim": 2, "binary": [[0, 2, 0, "1"]]})"), "binary[0][1]: index 2 out of range"));
        CHECK(has(parse_error(R"({"dim": 2, "binary": [[1, 0, 0, "1"]]})"), "binary[0]: requires i < j"));
        CHECK(has(parse_error(R"({"dim": 2, "binary": [[0, 0, 0, "1"]]})"), "binary[0]: requires i < j"));
        CHECK(has(parse_error(R"({"dim": 2, "binary": [[0, 1, 0, "1"], [0, 1, 0, "2"]]})"),
                  "binary[1]: duplicate entry"));
        CHECK(has(parse_error(R"({"dim": 2, "ternary": [[0, 1, 0, "1"]]})"), "ternary[0]: entry must be"));
        CHECK(has(parse_error(R"({"dim": 2, "ternary": [[0, 1, 0, 1, "2/4"]]})"), "ternary[0][4]"));
        CHECK(has(parse_error(R"({"dim": 2, "ternary": [[0, 1, 0, 1, 0.5]]})"), "ternary[0][4]"));
        CHECK(has(parse_error(R"({"dim": 2, "ternary": [[0, 1, 0, -1, "1"]]})"), "ternary[0][3]"));
        CHECK(has(parse_error(R"({"dim": 2, "basis": ["a"]})"), "basis"));
        CHECK(has(parse_error(R"({"dim": 2, "basis": ["a", "a"]})"), "basis[1]: duplicate label"));
        CHECK(has(parse_error(read_text_file(fixture("malformed.json"))), "line 8"));
        CHECK_THROWS_AS(read_text_file(fixture("does-not-exist.json")), Error);
    }

    TEST_CASE("Lie documents") {
        const LieAlgebra L = lie_sl2();
        const std::string text = emit_lie(L);
        const LieDocument d = parse_lie(text);
        CHECK(d.lie == L);
        CHECK_FALSE(d.b_dim);
        CHECK(emit_lie(d.lie) == text);

        for (const auto& B : full_catalog()) {
            const EnvelopingLie E = envelope(B);
            const std::string t = emit_envelope(E);
            const LieDocument back = parse_lie(t);
            REQUIRE(back.b_dim);
            CHECK(*back.b_dim == B.dim());
            CHECK(back.h_basis == E.h_basis);
            CHECK(back.lie == E.lie);
            EnvelopingLie again;
            again.lie = back.lie;
            again.b_dim = *back.b_dim;
            again.h_basis = back.h_basis;
            CHECK(emit_envelope(again) == t);
        }
        CHECK_THROWS_AS(parse_lie(R"({"dim": 3, "b_dim": 2})"), Error);
        CHECK_THROWS_AS(parse_lie(R"({"dim": 3, "b_dim": 2, "h_basis": []})"), Error);
    }
}
