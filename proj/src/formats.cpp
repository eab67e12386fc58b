#include "kcrank/formats.hpp"

#include <json.hpp>
#include <algorithm>
#include <cstdlib>
#include <istream>
#include <sstream>

namespace kcrank {

std::string render_table_text(const KCrankTable& t) {
    std::ostringstream out;
    out << "M_" << t.k() << "(m,n) for n <= " << t.order()
        << (t.k() >= 2 ? " (m = 0..n)" : " (m = -n..n)") << "\n";
    for (int n = 0; n <= t.order(); ++n) {
        out << n << ':';
        int lo = t.k() >= 2 ? 0 : -n;
        for (int m = lo; m <= n; ++m) out << ' ' << t.entry(m, n).get_str();
        out << "\n";
    }
    return out.str();
}

std::string render_table_csv(const KCrankTable& t) {
    std::ostringstream out;
    out << "n,m,value\n";
    for (int n = 0; n <= t.order(); ++n) {
        int lo = t.k() >= 2 ? 0 : -n;
        for (int m = lo; m <= n; ++m)
            out << n << ',' << m << ',' << t.entry(m, n).get_str() << "\n";
    }
    return out.str();
}

std::string render_table_json(const KCrankTable& t) {
    nlohmann::json j;
    j["k"] = t.k();
    j["order"] = t.order();
    nlohmann::json rows = nlohmann::json::array();
    for (int n = 0; n <= t.order(); ++n) {
        nlohmann::json row = nlohmann::json::array();
        int lo = t.k() >= 2 ? 0 : -n;
        for (int m = lo; m <= n; ++m) row.push_back(t.entry(m, n).get_str());
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
}

namespace {

Integer parse_decimal(const std::string& tok) {
    if (tok.empty()) throw CacheFormatError("empty numeric token");
    std::size_t start = tok[0] == '-' ? 1 : 0;
    if (start == tok.size()) throw CacheFormatError("bare sign");
    for (std::size_t i = start; i < tok.size(); ++i)
        if (tok[i] < '0' || tok[i] > '9')
            throw CacheFormatError("malformed number '" + tok + "'");
    return Integer(tok, 10);
}

}  // namespace

KCrankTable parse_table_csv(std::istream& in, int k) {
    std::string line;
    if (!std::getline(in, line) || line != "n,m,value")
        throw CacheFormatError("missing n,m,value header");
    struct Cell {
        int n;
        int m;
        Integer v;
    };
    std::vector<Cell> cells;
    int order = -1;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string ntok, mtok, vtok;
        if (!std::getline(ls, ntok, ',') || !std::getline(ls, mtok, ',') ||
            !std::getline(ls, vtok))
            throw CacheFormatError("malformed csv row '" + line + "'");
        Cell c{static_cast<int>(parse_decimal(ntok).get_si()),
               static_cast<int>(parse_decimal(mtok).get_si()), parse_decimal(vtok)};
        order = std::max(order, c.n);
        cells.push_back(std::move(c));
    }
    if (order < 0) throw CacheFormatError("csv table has no rows");
    KCrankTable t(k, order);
    for (auto& c : cells) {
        if (c.n < 0 || (k >= 2 && (c.m < 0 || c.m > c.n)) || (k == 1 && std::abs(c.m) > c.n))
            throw CacheFormatError("csv cell out of range");
        t.slot(c.m, c.n) = std::move(c.v);
    }
    return t;
}

KCrankTable parse_table_json(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw CacheFormatError(std::string("bad json: ") + e.what());
    }
    if (!j.contains("k") || !j.contains("order") || !j.contains("rows"))
        throw CacheFormatError("json table needs k, order, rows");
    int k = j["k"].get<int>();
    int order = j["order"].get<int>();
    const auto& rows = j["rows"];
    if (!rows.is_array() || static_cast<int>(rows.size()) != order + 1)
        throw CacheFormatError("json table has wrong row count");
    KCrankTable t(k, order);
    for (int n = 0; n <= order; ++n) {
        const auto& row = rows[n];
        std::size_t want = static_cast<std::size_t>(k >= 2 ? n + 1 : 2 * n + 1);
        if (!row.is_array() || row.size() != want)
            throw CacheFormatError("json row " + std::to_string(n) + " has wrong width");
        int lo = k >= 2 ? 0 : -n;
        for (int m = lo; m <= n; ++m)
            t.slot(m, n) = parse_decimal(row[m - lo].get<std::string>());
    }
    return t;
}

std::string render_residues_text(const ResidueTable& t) {
    std::ostringstream out;
    out << "M_" << t.k() << "(r," << t.modulus() << ",n) for n <= " << t.order()
        << " (r = 0.." << t.modulus() - 1 << ")\n";
    for (int n = 0; n <= t.order(); ++n) {
        out << n << ':';
        for (int r = 0; r < t.modulus(); ++r) out << ' ' << t.count(r, n).get_str();
        out << "\n";
    }
    return out.str();
}

std::string render_residues_csv(const ResidueTable& t) {
    std::ostringstream out;
    out << "n,r,value\n";
    for (int n = 0; n <= t.order(); ++n)
        for (int r = 0; r < t.modulus(); ++r)
            out << n << ',' << r << ',' << t.count(r, n).get_str() << "\n";
    return out.str();
}

std::string render_residues_json(const ResidueTable& t) {
    nlohmann::json j;
    j["k"] = t.k();
    j["modulus"] = t.modulus();
    j["order"] = t.order();
    nlohmann::json rows = nlohmann::json::array();
    for (int n = 0; n <= t.order(); ++n) {
        nlohmann::json row = nlohmann::json::array();
        for (int r = 0; r < t.modulus(); ++r) row.push_back(t.count(r, n).get_str());
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
}

std::string render_series_text(const QSeries& s) { return s.str() + "\n"; }

std::string render_series_csv(const QSeries& s) {
    std::ostringstream out;
    out << "n,coefficient\n";
    for (int n = 0; n <= s.order(); ++n) out << n << ',' << s[n].get_str() << "\n";
    return out.str();
}

std::string render_series_json(const QSeries& s) {
    nlohmann::json j;
    j["order"] = s.order();
    nlohmann::json coeffs = nlohmann::json::array();
    for (int n = 0; n <= s.order(); ++n) coeffs.push_back(s[n].get_str());
    j["coefficients"] = std::move(coeffs);
    return j.dump(2) + "\n";
}

std::string render_sequence_text(const std::vector<Integer>& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ' ';
        out << v[i].get_str();
    }
    out << "\n";
    return out.str();
}

std::string render_sequence_csv(const std::vector<Integer>& v) {
    std::ostringstream out;
    out << "n,value\n";
    for (std::size_t i = 0; i < v.size(); ++i) out << i << ',' << v[i].get_str() << "\n";
    return out.str();
}

std::string render_sequence_json(const std::vector<Integer>& v) {
    nlohmann::json j;
    nlohmann::json vals = nlohmann::json::array();
    for (const auto& x : v) vals.push_back(x.get_str());
    j["values"] = std::move(vals);
    return j.dump(2) + "\n";
}

}  // namespace kcrank
