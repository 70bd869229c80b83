#pragma once

// Complex files and homology reports.
//
// Complex file format (UTF-8, one record per line):
//
//   # comment
//   a b c ; 2        simplex {a,b,c} with weight 2
//
// Labels are whitespace-separated and may not contain ';'. A header line
// `!maximal <w>` before any record switches to maximal mode: records then
// omit `; w`, list maximal simplices only, and every face gets weight w.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "wsh/complex.hpp"
#include "wsh/field.hpp"
#include "wsh/homology.hpp"

namespace wsh {

enum class FaceMode {
    Strict,         // every face must be listed
    CompleteFaces,  // missing faces are added (see complete_faces)
};

/// Throws Error(ParseError) or the complex validation errors, with the
/// 1-based line number of the offending record.
WeightedComplex parse_complex_file(std::string_view text, FaceMode mode = FaceMode::Strict);
WeightedComplex read_complex_file(const std::filesystem::path& path, FaceMode mode = FaceMode::Strict);

/// Every simplex as an explicit record, by dimension then lexicographic order.
std::string serialize_complex(const WeightedComplex& complex);

struct ReportPair {
    LabeledSimplex kappa;
    LabeledSimplex mu;
    Weight m = 0;

    friend bool operator==(const ReportPair&, const ReportPair&) = default;
};

struct ReportMonomial {
    Weight exponent = 0;
    std::string coefficient;

    friend bool operator==(const ReportMonomial&, const ReportMonomial&) = default;
};

struct ReportChainEntry {
    LabeledSimplex simplex;
    std::vector<ReportMonomial> polynomial;

    friend bool operator==(const ReportChainEntry&, const ReportChainEntry&) = default;
};

struct ReportGenerator {
    std::optional<Weight> torsion;
    std::vector<ReportChainEntry> chain;

    friend bool operator==(const ReportGenerator&, const ReportGenerator&) = default;
};

struct ReportDimension {
    int n = 0;
    std::size_t free_rank = 0;
    std::vector<Weight> torsion;
    std::vector<ReportPair> pairs;
    std::optional<std::vector<ReportGenerator>> generators;

    friend bool operator==(const ReportDimension&, const ReportDimension&) = default;
};

struct HomologyReport {
    FieldSpec field;
    std::vector<ReportDimension> dimensions;

    friend bool operator==(const HomologyReport&, const HomologyReport&) = default;
};

HomologyReport make_report(const WeightedComplex& complex, const FieldSpec& field,
                           std::span<const HomologyModule> modules);

/// "R^2 (+) R/(pi^1) (+) R/(pi^3)"; "0" for the zero module.
std::string render_module(std::size_t free_rank, std::span<const Weight> torsion);

std::string to_text(const HomologyReport& report);
nlohmann::json to_json(const HomologyReport& report);
/// Inverse of to_json(); throws Error(ParseError) on schema violations.
HomologyReport report_from_json(const nlohmann::json& j);

}  // namespace wsh
