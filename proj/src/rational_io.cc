// Copyright 2026 The dcc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dcc/rational_io.h"

#include <charconv>
#include <cstdlib>
#include <stdexcept>

namespace dcc {

std::string rational_str(const mpq_class &v) {
    mpq_class c = v;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

mpq_class parse_rational(const std::string &text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    try {
        if (text.find('/') != std::string::npos) {
            mpq_class r(text, 10);
            if (r.get_den() == 0) throw std::invalid_argument("zero denominator");
            r.canonicalize();
            return r;
        }
        // Decimal with an optional exponent, converted exactly.
        std::string mant = text;
        long exp10 = 0;
        auto e = text.find_first_of("eE");
        if (e != std::string::npos) {
            mant = text.substr(0, e);
            size_t used = 0;
            std::string tail = text.substr(e + 1);
            exp10 = std::stol(tail, &used);
            if (used != tail.size()) throw std::invalid_argument("bad exponent");
        }
        auto dot = mant.find('.');
        if (dot != std::string::npos) {
            exp10 -= (long)(mant.size() - dot - 1);
            mant.erase(dot, 1);
        }
        if (mant.empty() || mant == "-" || mant == "+") throw std::invalid_argument("no digits");
        if (mant[0] == '+') mant.erase(0, 1);
        mpz_class num(mant, 10), scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, (unsigned long)std::labs(exp10));
        mpq_class r = exp10 >= 0 ? mpq_class(num * scale) : mpq_class(num, scale);
        r.canonicalize();
        return r;
    } catch (const std::exception &) {
        throw std::invalid_argument("not a rational number: " + text);
    }
}

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace dcc
