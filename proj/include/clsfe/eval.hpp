#ifndef CLSFE_EVAL_HPP
#define CLSFE_EVAL_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "clsfe/util.hpp"

namespace clsfe {

// Exact rational, kept normalized. Score aggregation stays exact until the
// final 2-decimal rendering.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d);
    static Rational from_decimal(const std::string& text);

    Rational operator+(const Rational& o) const;
    Rational operator/(std::int64_t k) const;
    bool operator==(const Rational& o) const = default;

    double to_double() const { return static_cast<double>(num) / den; }
    // half-up rounding to two decimals, e.g. "3.76"
    std::string to_fixed2() const;
};

struct MosRecord {
    std::string listener_id;
    std::string text_language;
    std::string voice_id;
    int intelligibility = 0;  // 1..5
    int naturalness = 0;      // 1..5
};

// Pre-aggregated per-(language, voice, measure) cell mean, for replaying
// published tables.
struct MosCell {
    std::string text_language;
    std::string voice_id;
    std::string measure;  // "intelligibility" | "naturalness"
    Rational mean;
};

struct MosTable {
    // (language, voice, measure) -> cell mean
    std::map<std::tuple<std::string, std::string, std::string>, Rational> cells;
    // (voice, measure) -> unweighted mean of that voice's cell means
    std::map<std::pair<std::string, std::string>, Rational> grand_means;
};

MosTable mos_table(const std::vector<MosRecord>& records);
MosTable mos_table_from_cells(const std::vector<MosCell>& cells);

enum class AxyChoice { X, Y, Neither };

struct AxyRecord {
    std::string listener_id;
    std::string item_id;
    std::string system_x;
    std::string system_y;
    AxyChoice preference = AxyChoice::Neither;
};

struct AxyFractions {
    Rational x, y, neither;
    std::size_t count = 0;
};

// Keyed by ordered (system_x, system_y) pair.
std::map<std::pair<std::string, std::string>, AxyFractions> axy_preference(
    const std::vector<AxyRecord>& records);

struct LangIdRecord {
    std::string listener_id;
    std::string item_id;
    std::string true_language;
    std::string chosen_language;
};

struct Confusion {
    std::map<std::pair<std::string, std::string>, std::size_t> matrix;
    Rational accuracy;
    std::size_t total = 0;
};

Confusion langid_confusion(const std::vector<LangIdRecord>& records);

enum class SheetDesign { MOS, AXY, LangID };

struct AxyItem {
    std::string item_id;
    std::string reference;
    std::string sample_x;
    std::string sample_y;
};

struct SheetEntry {
    std::size_t position = 0;
    std::string item_id;
    std::vector<std::string> role_fields;
};

std::vector<SheetEntry> make_sheet(const std::vector<std::string>& stimuli,
                                   SheetDesign design, std::uint64_t seed);
std::vector<SheetEntry> make_axy_sheet(const std::vector<AxyItem>& items,
                                       std::uint64_t seed);

// Ratings files are TSV with a `design<TAB>name` header line.
struct RatingsFile {
    std::string design;  // "mos", "mos-cells", "axy", "langid"
    std::vector<MosRecord> mos;
    std::vector<MosCell> mos_cells;
    std::vector<AxyRecord> axy;
    std::vector<LangIdRecord> langid;
};

RatingsFile load_ratings(const std::string& text);

}  // namespace clsfe

#endif  // CLSFE_EVAL_HPP
