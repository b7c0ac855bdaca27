#include "doublet/output.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace doublet {

Json cyclotomic_json(const Cyclotomic& c) {
    Json j;
    j["conductor"] = c.conductor();
    Json coeffs = Json::array();
    for (const auto& r : c.coeffs()) coeffs.push_back(r.str());
    j["coeffs"] = coeffs;
    std::string d = c.display();
    if (!d.empty()) j["display"] = d;
    return j;
}

Json make_document(const std::string& command, Json payload) {
    Json doc;
    doc["schemaVersion"] = "1";
    doc["command"] = command;
    doc["payload"] = std::move(payload);
    return doc;
}

namespace {

using Mat = std::vector<std::vector<long long>>;

std::string factor_string(const std::vector<long long>& v) {
    std::string s;
    int terms = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        if (!s.empty()) s += "+";
        if (v[i] != 1) s += std::to_string(v[i]);
        s += "x" + std::to_string(i);
        ++terms;
    }
    if (terms > 1) s = "(" + s + ")";
    return s;
}

long long content(const std::vector<long long>& v) {
    long long g = 0;
    for (long long x : v) g = std::gcd(g, x);
    return g == 0 ? 1 : g;
}

}  // namespace

std::string partition_function_string(const Mat& m) {
    if (m.empty()) return "0";
    Mat rest = m;
    int rows = (int)m.size(), cols = (int)m[0].size();
    std::vector<std::pair<std::vector<long long>, std::vector<long long>>> blocks;
    while (true) {
        int i0 = -1, j0 = -1;
        for (int i = 0; i < rows && i0 < 0; ++i)
            for (int j = 0; j < cols; ++j)
                if (rest[i][j] != 0) { i0 = i; j0 = j; break; }
        if (i0 < 0) break;
        // right factor = the first nonzero row; left coefficients maximal
        std::vector<long long> v(rest[i0]);
        std::vector<long long> u(rows, 0);
        for (int i = i0; i < rows; ++i) {
            long long c = -1;
            for (int j = 0; j < cols; ++j) {
                if (v[j] == 0) continue;
                long long q = rest[i][j] / v[j];
                c = c < 0 ? q : std::min(c, q);
            }
            u[i] = std::max(c, 0LL);
        }
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) rest[i][j] -= u[i] * v[j];
        blocks.emplace_back(std::move(u), std::move(v));
    }
    std::string out;
    for (auto& [u, v] : blocks) {
        long long c = content(u) * content(v);
        std::vector<long long> un = u, vn = v;
        if (content(u) > 1)
            for (auto& x : un) x /= content(u);
        if (content(v) > 1)
            for (auto& x : vn) x /= content(v);
        std::string term;
        if (c > 1) term += std::to_string(c);
        if (un == vn) {
            std::string f = factor_string(un);
            if (f.size() > 2 && f.front() == '(') f = f.substr(1, f.size() - 2);
            term += "|" + f + "|^2";
        } else {
            term += factor_string(un) + factor_string(vn) + "^*";
        }
        if (!out.empty()) out += "+";
        out += term;
    }
    return out.empty() ? "0" : out;
}

std::string markdown_table(const std::vector<std::string>& header,
                           const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream os;
    os << "|";
    for (const auto& h : header) os << " " << h << " |";
    os << "\n|";
    for (size_t i = 0; i < header.size(); ++i) os << " --- |";
    os << "\n";
    for (const auto& row : rows) {
        os << "|";
        for (const auto& cell : row) os << " " << cell << " |";
        os << "\n";
    }
    return os.str();
}

std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream os;
    auto emit = [&](const std::vector<std::string>& cells) {
        for (size_t i = 0; i < cells.size(); ++i) {
            if (i) os << ",";
            bool quote = cells[i].find_first_of(",\"\n") != std::string::npos;
            if (quote) {
                os << '"';
                for (char ch : cells[i]) {
                    if (ch == '"') os << '"';
                    os << ch;
                }
                os << '"';
            } else {
                os << cells[i];
            }
        }
        os << "\n";
    };
    emit(header);
    for (const auto& row : rows) emit(row);
    return os.str();
}

}  // namespace doublet
