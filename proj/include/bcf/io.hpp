#ifndef BCF_IO_HPP
#define BCF_IO_HPP

#include <climits>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bcf/cartan.hpp"
#include "bcf/numeric.hpp"
#include "bcf/seed.hpp"
#include "bcf/weyl.hpp"

namespace bcf
{

using Json = nlohmann::ordered_json;

inline Json integer_json(const Integer &z)
{
    if (z.fits_slong_p()) {
        return Json(z.get_si());
    }
    return Json(z.get_str());
}

// Rationals serialize as [numerator, denominator]; huge parts fall back to decimal strings.
inline Json to_json(const Rational &q)
{
    return Json::array({integer_json(q.get_num()), integer_json(q.get_den())});
}

inline Json to_json(const RatMatrix &m)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row.push_back(to_json(m(i, j)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json to_json(const IntMatrix &m)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row.push_back(integer_json(m(i, j)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json to_json(const CartanRealization &R)
{
    Json j;
    j["r"] = R.r();
    j["C"] = to_json(R.core.C);
    j["d"] = R.core.d;
    j["extension"] = to_json(R.extension);
    j["rtilde"] = R.rtilde;
    j["Cfull"] = to_json(R.cfull);
    j["dfull"] = R.dfull;
    j["D"] = R.D;
    j["autoExtension"] = R.auto_extension;
    return j;
}

inline Json to_json(const Seed &s)
{
    Json j;
    j["I"] = s.labels;
    Json frozen = Json::array();
    for (bool f : s.frozen) {
        frozen.push_back(f);
    }
    j["frozen"] = std::move(frozen);
    j["weights"] = s.weights;
    j["B"] = to_json(s.B);
    j["d"] = s.d;
    return j;
}

inline Json to_json(const Seed &s, const EnsembleMatrices &e)
{
    Json j = to_json(s);
    j["M"] = to_json(e.M);
    j["Btilde"] = to_json(e.Btilde);
    j["detBtilde"] = to_json(e.detBtilde);
    return j;
}

inline IntMatrix matrix_from_json(const Json &j)
{
    if (!j.is_array() || j.empty()) {
        throw Error(ErrorKind::ParseError, "matrix must be a nonempty array of rows");
    }
    std::vector<std::vector<long>> rows;
    for (const auto &row : j) {
        if (!row.is_array()) {
            throw Error(ErrorKind::ParseError, "matrix row must be an array");
        }
        std::vector<long> r;
        for (const auto &x : row) {
            if (!x.is_number_integer()) {
                throw Error(ErrorKind::ParseError, "matrix entries must be integers");
            }
            r.push_back(x.get<long>());
        }
        rows.push_back(std::move(r));
    }
    return IntMatrix::from(rows);
}

// Accepts {"C": [[...]], "extension": [[...]]}; r and d, if present, are checked.
inline CartanRealization realization_from_json(const Json &j)
{
    if (!j.is_object() || !j.contains("C")) {
        throw Error(ErrorKind::ParseError, "Cartan JSON needs a \"C\" field");
    }
    const IntMatrix C = matrix_from_json(j.at("C"));
    std::optional<IntMatrix> ext;
    if (j.contains("extension") && !j.at("extension").empty()) {
        ext = matrix_from_json(j.at("extension"));
    }
    CartanRealization R = realize(C, ext);
    if (j.contains("r") && j.at("r") != R.r()) {
        throw Error(ErrorKind::BadShape, "field r disagrees with C");
    }
    if (j.contains("d") && j.at("d").get<std::vector<int>>() != R.core.d) {
        throw Error(ErrorKind::NotSymmetrizable, "supplied d is not the minimal symmetrizer");
    }
    return R;
}

inline std::string rational_text(const Rational &q)
{
    return q.get_str();
}

inline std::string matrix_text(const RatMatrix &m, const std::vector<int> &labels = {})
{
    std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
    std::size_t width = 1;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            cells[i][j] = m(i, j).get_str();
            width = std::max(width, cells[i][j].size());
        }
    }
    for (int l : labels) {
        width = std::max(width, std::to_string(l).size());
    }
    auto pad = [&](const std::string &s) { return std::string(width - s.size() + 1, ' ') + s; };
    std::ostringstream os;
    if (!labels.empty()) {
        os << std::string(width + 1, ' ') << " |";
        for (int l : labels) {
            os << pad(std::to_string(l));
        }
        os << '\n';
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (!labels.empty()) {
            os << pad(std::to_string(labels[i])) << " |";
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            os << pad(cells[i][j]);
        }
        os << '\n';
    }
    return os.str();
}

inline std::string matrix_text(const IntMatrix &m)
{
    return matrix_text(m.cast<Rational>());
}

// One verification outcome, emitted as a JSON line.
struct CheckResult {
    std::string check;
    std::string instance;
    bool pass = true;
    Json witness;

    Json json() const
    {
        Json j;
        j["check"] = check;
        j["instance"] = instance;
        j["pass"] = pass;
        j["witness"] = witness;
        return j;
    }
};

struct Report {
    std::vector<CheckResult> results;

    bool pass() const
    {
        for (const auto &r : results) {
            if (!r.pass) {
                return false;
            }
        }
        return true;
    }
    std::size_t failures() const
    {
        std::size_t n = 0;
        for (const auto &r : results) {
            n += r.pass ? 0 : 1;
        }
        return n;
    }
    void add(CheckResult r)
    {
        results.push_back(std::move(r));
    }
    void append(const Report &o)
    {
        results.insert(results.end(), o.results.begin(), o.results.end());
    }
    std::string json_lines() const
    {
        std::string out;
        for (const auto &r : results) {
            out += r.json().dump();
            out += '\n';
        }
        return out;
    }
};

inline std::string describe(const Word &letters, const std::string &type = {})
{
    std::string out = type.empty() ? "" : type + " ";
    return out + "(" + word_to_string(letters) + ")";
}

} // namespace bcf

#endif
