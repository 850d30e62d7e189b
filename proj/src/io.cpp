#include "qkgr/io.hpp"

#include <limits>
#include <ostream>
#include <sstream>

#include "qkgr/errors.hpp"

namespace qkgr {

long long to_ll(const Int& v) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (v < lo || v > hi)
        throw internal_error("coefficient exceeds 64-bit range");
    return v.convert_to<long long>();
}

namespace {

std::string render_partition_class(const Partition& p) {
    std::string out = "O[";
    const auto& rows = p.rows();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(rows[i]);
    }
    return out + "]";
}

// one signed term; the sign is emitted by the caller
std::string render_piece(const Int& magnitude, int d, const Partition& nu) {
    std::vector<std::string> pieces;
    if (magnitude != 1) pieces.push_back(magnitude.str());
    if (d == 1) pieces.push_back("q");
    else if (d > 1) pieces.push_back("q^" + std::to_string(d));
    if (!nu.empty()) pieces.push_back(render_partition_class(nu));
    if (pieces.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (i) out += '*';
        out += pieces[i];
    }
    return out;
}

template <typename Fn>
void for_ordered_terms(const QKElement& x, Fn&& fn) {
    // (d ascending, then the global partition order)
    int max_d = 0;
    for (const auto& [nu, poly] : x.terms())
        max_d = std::max(max_d, poly.degree());
    for (int d = 0; d <= max_d; ++d)
        for (const auto& [nu, poly] : x.terms()) {
            Int c = poly.coeff(d);
            if (c != 0) fn(nu, d, c);
        }
}

} // namespace

std::string render_text(const QKElement& x) {
    std::string out;
    for_ordered_terms(x, [&](const Partition& nu, int d, const Int& c) {
        bool negative = c < 0;
        if (out.empty())
            out = negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        out += render_piece(negative ? Int(-c) : c, d, nu);
    });
    return out.empty() ? "0" : out;
}

std::string render_qpoly(const QPoly& p) {
    std::string out;
    for (const auto& [d, c] : p.coeffs()) {
        bool negative = c < 0;
        if (out.empty())
            out = negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        out += render_piece(negative ? Int(-c) : c, d, Partition{});
    }
    return out.empty() ? "0" : out;
}

Json element_to_json(const QKElement& x) {
    Json terms = Json::array();
    for_ordered_terms(x, [&](const Partition& nu, int d, const Int& c) {
        Json term;
        term["nu"] = nu.rows();
        term["d"] = d;
        term["coeff"] = to_ll(c);
        terms.push_back(std::move(term));
    });
    return terms;
}

QKElement element_from_json(const GrassCtx& ctx, const Json& j) {
    if (!j.is_array()) throw invalid_argument("element JSON must be an array");
    QKElement x(ctx);
    for (const Json& term : j) {
        if (!term.is_object() || !term.contains("nu") || !term.contains("d") ||
            !term.contains("coeff"))
            throw invalid_argument("malformed element term");
        std::vector<int> rows = term["nu"].get<std::vector<int>>();
        int d = term["d"].get<int>();
        long long c = term["coeff"].get<long long>();
        if (d < 0) throw invalid_argument("negative q exponent");
        x.add_term(Partition(std::move(rows)), d, Int(c));
    }
    return x;
}

std::string render_giambelli(GiambelliCache& cache, const Partition& lambda) {
    std::string out;
    for (const auto& [coeff, factors] : cache.monomials(lambda)) {
        bool negative = coeff < 0;
        Int magnitude = negative ? Int(-coeff) : coeff;
        if (out.empty())
            out = negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        std::string piece;
        if (magnitude != 1 || factors.empty()) piece = magnitude.str();
        for (int p : factors) {
            if (!piece.empty()) piece += '*';
            piece += "O[" + std::to_string(p) + "]";
        }
        out += piece;
    }
    return out.empty() ? "0" : out;
}

Json report_to_json(const Report& r) {
    Json j;
    j["suite"] = r.suite;
    j["ctx"] = Json{{"m", r.m}, {"n", r.n}};
    j["checked"] = r.checked;
    Json v = Json::array();
    for (const Violation& violation : r.violations)
        v.push_back(Json{{"inputs", violation.inputs},
                         {"expected", violation.expected},
                         {"actual", violation.actual}});
    j["violations"] = std::move(v);
    j["pass"] = r.pass;
    return j;
}

namespace {

constexpr const char* kCacheFormat = "qkgr-table";
constexpr int kCacheVersion = 1;

} // namespace

void write_cache(std::ostream& os, const GrassCtx& ctx, const Table& table) {
    Json header;
    header["format"] = kCacheFormat;
    header["version"] = kCacheVersion;
    header["m"] = ctx.m();
    header["n"] = ctx.n();
    os << header.dump() << '\n';
    for (const auto& [pair, product] : table) {
        Json record;
        record["lhs"] = pair.first.rows();
        record["rhs"] = pair.second.rows();
        record["terms"] = element_to_json(product);
        os << record.dump() << '\n';
    }
}

Table read_cache(std::istream& is, const GrassCtx& ctx) {
    std::string line;
    if (!std::getline(is, line))
        throw invalid_argument("cache file is empty");
    Json header = Json::parse(line, nullptr, false);
    if (header.is_discarded() || !header.is_object())
        throw invalid_argument("cache header is not valid JSON");
    if (header.value("format", std::string{}) != kCacheFormat ||
        header.value("version", -1) != kCacheVersion)
        throw invalid_argument("unsupported cache format/version");
    if (header.value("m", -1) != ctx.m() || header.value("n", -1) != ctx.n())
        throw invalid_argument("cache context does not match request");
    Table table;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        Json record = Json::parse(line, nullptr, false);
        if (record.is_discarded() || !record.is_object() ||
            !record.contains("lhs") || !record.contains("rhs") ||
            !record.contains("terms"))
            throw invalid_argument("malformed cache record");
        Partition lhs(record["lhs"].get<std::vector<int>>());
        Partition rhs(record["rhs"].get<std::vector<int>>());
        table.emplace(std::make_pair(std::move(lhs), std::move(rhs)),
                      element_from_json(ctx, record["terms"]));
    }
    return table;
}

void write_table_text(std::ostream& os, const Table& table) {
    for (const auto& [pair, product] : table)
        os << render_partition_class(pair.first) << " * "
           << render_partition_class(pair.second) << " = "
           << render_text(product) << '\n';
}

} // namespace qkgr
