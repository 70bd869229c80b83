#include "wsh/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "wsh/error.hpp"

namespace wsh {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\f\v");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\f\v");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) out.emplace_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

std::optional<Weight> parse_weight(std::string_view s) {
    Weight w = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), w);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return w;
}

}  // namespace

WeightedComplex parse_complex_file(std::string_view text, FaceMode mode) {
    std::optional<Weight> maximal_weight;
    std::vector<WeightedSimplex> records;
    std::vector<LabeledSimplex> maximal;
    std::vector<std::size_t> origins;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto end = text.find('\n', pos);
        const auto raw = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
        pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
        ++line_no;

        const auto line = trim(raw);
        if (line.empty() || line.front() == '#') continue;

        if (line.front() == '!') {
            auto tokens = split_ws(line);
            if (tokens[0] != "!maximal") throw Error(ErrorCode::ParseError, "unknown directive '" + tokens[0] + "'", line_no);
            if (!records.empty() || !maximal.empty() || maximal_weight)
                throw Error(ErrorCode::ParseError, "!maximal must precede all records", line_no);
            if (tokens.size() != 2 || !(maximal_weight = parse_weight(tokens[1])))
                throw Error(ErrorCode::ParseError, "expected '!maximal <non-negative weight>'", line_no);
            continue;
        }

        const auto semi = line.find(';');
        if (maximal_weight) {
            if (semi != std::string_view::npos)
                throw Error(ErrorCode::ParseError, "records in maximal mode carry no weight", line_no);
            maximal.push_back(split_ws(line));
            origins.push_back(line_no);
            continue;
        }

        if (semi == std::string_view::npos)
            throw Error(ErrorCode::ParseError, "expected 'v1 v2 ... ; weight'", line_no);
        auto labels = split_ws(line.substr(0, semi));
        if (labels.empty()) throw Error(ErrorCode::ParseError, "record lists no vertices", line_no);
        const auto rhs = trim(line.substr(semi + 1));
        auto w = parse_weight(rhs);
        if (!w) throw Error(ErrorCode::ParseError, "weight '" + std::string(rhs) + "' is not a non-negative integer", line_no);
        records.push_back({std::move(labels), *w});
        origins.push_back(line_no);
    }

    if (maximal_weight) return detail::from_maximal(maximal, *maximal_weight, origins);
    if (mode == FaceMode::CompleteFaces) return detail::complete_faces(records, origins);
    return detail::build_complex(records, origins);
}

WeightedComplex read_complex_file(const std::filesystem::path& path, FaceMode mode) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path.string() + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_complex_file(buf.str(), mode);
}

std::string serialize_complex(const WeightedComplex& complex) {
    std::string out;
    for (const auto& rec : complex.records()) {
        for (const auto& l : rec.vertices) {
            out += l;
            out += ' ';
        }
        out += "; " + std::to_string(rec.weight) + "\n";
    }
    return out;
}

// -- reports ------------------------------------------------------------------

HomologyReport make_report(const WeightedComplex& complex, const FieldSpec& field,
                           std::span<const HomologyModule> modules) {
    HomologyReport r;
    r.field = field;
    for (const auto& h : modules) {
        ReportDimension d;
        d.n = h.n;
        d.free_rank = h.free_rank;
        d.torsion = h.torsion;
        for (const auto& p : h.pairing.pairs)
            d.pairs.push_back({complex.labels_of(complex.simplices(h.n)[p.kappa]),
                               complex.labels_of(complex.simplices(h.n + 1)[p.mu]), p.m});
        if (h.generators) {
            d.generators.emplace();
            for (const auto& g : *h.generators) {
                ReportGenerator rg;
                rg.torsion = g.torsion;
                for (const auto& t : g.terms) {
                    auto labels = complex.labels_of(complex.simplices(h.n)[t.simplex]);
                    if (rg.chain.empty() || rg.chain.back().simplex != labels) rg.chain.push_back({labels, {}});
                    rg.chain.back().polynomial.push_back({t.exponent, t.coefficient.to_string()});
                }
                d.generators->push_back(std::move(rg));
            }
        }
        r.dimensions.push_back(std::move(d));
    }
    return r;
}

std::string render_module(std::size_t free_rank, std::span<const Weight> torsion) {
    std::vector<std::string> parts;
    if (free_rank == 1) parts.emplace_back("R");
    if (free_rank > 1) parts.push_back("R^" + std::to_string(free_rank));
    for (Weight m : torsion) parts.push_back("R/(pi^" + std::to_string(m) + ")");
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) out += " (+) " + parts[i];
    return out;
}

namespace {

std::string braces(const LabeledSimplex& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + s[i];
    return out + "}";
}

std::string render_chain(const std::vector<ReportChainEntry>& chain) {
    std::string out;
    for (const auto& e : chain)
        for (const auto& t : e.polynomial) {
            if (!out.empty()) out += " + ";
            out += "(" + t.coefficient + ")";
            if (t.exponent > 0) out += "*pi^" + std::to_string(t.exponent);
            out += "*" + braces(e.simplex);
        }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string to_text(const HomologyReport& report) {
    std::ostringstream out;
    out << "Weighted homology over " << report.field.ring_name() << "\n";
    for (const auto& d : report.dimensions) {
        out << "H_" << d.n << " = " << render_module(d.free_rank, d.torsion) << "\n";
        if (!d.generators) continue;
        for (const auto& p : d.pairs)
            out << "  pair " << braces(p.kappa) << " ~ " << braces(p.mu) << "  m=" << p.m << "\n";
        for (const auto& g : *d.generators) {
            out << "  generator ";
            if (g.torsion)
                out << "R/(pi^" << *g.torsion << ")";
            else
                out << "R";
            out << ": " << render_chain(g.chain) << "\n";
        }
    }
    return out.str();
}

nlohmann::json to_json(const HomologyReport& report) {
    using nlohmann::json;
    json dims = json::array();
    for (const auto& d : report.dimensions) {
        json pairs = json::array();
        for (const auto& p : d.pairs) pairs.push_back({{"kappa", p.kappa}, {"mu", p.mu}, {"m", p.m}});
        json entry = {{"n", d.n}, {"free_rank", d.free_rank}, {"torsion", d.torsion}, {"pairs", pairs}};
        if (d.generators) {
            json gens = json::array();
            for (const auto& g : *d.generators) {
                json chain = json::array();
                for (const auto& e : g.chain) {
                    json poly = json::array();
                    for (const auto& t : e.polynomial) poly.push_back({{"exponent", t.exponent}, {"coefficient", t.coefficient}});
                    chain.push_back({{"simplex", e.simplex}, {"polynomial", poly}});
                }
                gens.push_back({{"torsion", g.torsion ? json(*g.torsion) : json(nullptr)}, {"chain", chain}});
            }
            entry["generators"] = gens;
        }
        dims.push_back(std::move(entry));
    }
    return {{"field", report.field.to_string()}, {"dimensions", dims}};
}

HomologyReport report_from_json(const nlohmann::json& j) {
    try {
        HomologyReport r;
        r.field = FieldSpec::parse(j.at("field").get<std::string>());
        for (const auto& jd : j.at("dimensions")) {
            ReportDimension d;
            d.n = jd.at("n").get<int>();
            d.free_rank = jd.at("free_rank").get<std::size_t>();
            d.torsion = jd.at("torsion").get<std::vector<Weight>>();
            for (const auto& jp : jd.at("pairs"))
                d.pairs.push_back({jp.at("kappa").get<LabeledSimplex>(), jp.at("mu").get<LabeledSimplex>(),
                                   jp.at("m").get<Weight>()});
            if (jd.contains("generators")) {
                d.generators.emplace();
                for (const auto& jg : jd.at("generators")) {
                    ReportGenerator g;
                    if (!jg.at("torsion").is_null()) g.torsion = jg.at("torsion").get<Weight>();
                    for (const auto& je : jg.at("chain")) {
                        ReportChainEntry e;
                        e.simplex = je.at("simplex").get<LabeledSimplex>();
                        for (const auto& jt : je.at("polynomial"))
                            e.polynomial.push_back({jt.at("exponent").get<Weight>(), jt.at("coefficient").get<std::string>()});
                        g.chain.push_back(std::move(e));
                    }
                    d.generators->push_back(std::move(g));
                }
            }
            r.dimensions.push_back(std::move(d));
        }
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("malformed report: ") + e.what());
    }
}

}  // namespace wsh
