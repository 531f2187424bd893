#pragma once

#include <json.hpp>

#include "isoact/free_word.hpp"
#include "isoact/measure.hpp"
#include "isoact/rational.hpp"
#include "isoact/su11.hpp"

namespace isoact {

using json = nlohmann::json;

using WordMeasure = FiniteMeasure<FreeWord>;
using SuMeasure = FiniteMeasure<SuMatrix, SuLess>;

// Exact rationals travel as integers or "p/q" strings; JSON floats are refused.
Rational rational_from_json(const json& j);
json rational_to_json(const Rational& q);

json encode(const SuMatrix& g);
SuMatrix decode_su(const json& j);

json encode(const FreeWord& w);
FreeWord decode_word(const json& j, int rank);

// [{"elem": ..., "num": n, "den": d}, ...]
json encode(const WordMeasure& m);
json encode(const SuMeasure& m);
WordMeasure decode_word_measure(const json& j, int rank);
SuMeasure decode_su_measure(const json& j);

}  // namespace isoact
