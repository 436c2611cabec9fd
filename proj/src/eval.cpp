#include "clsfe/eval.hpp"

#include <array>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

namespace clsfe {

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw FrontendError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational Rational::from_decimal(const std::string& text) {
    std::size_t dot = text.find('.');
    try {
        if (dot == std::string::npos)
            return Rational(std::stoll(text), 1);
        std::string whole = text.substr(0, dot);
        std::string frac = text.substr(dot + 1);
        if (frac.empty() || frac.size() > 9)
            throw FrontendError("malformed decimal '" + text + "'");
        std::int64_t den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        bool neg = !whole.empty() && whole[0] == '-';
        std::int64_t w = whole.empty() || whole == "-" ? 0 : std::stoll(whole);
        std::int64_t f = std::stoll(frac);
        std::int64_t n = (w < 0 ? -w : w) * den + f;
        return Rational(neg || w < 0 ? -n : n, den);
    } catch (const std::invalid_argument&) {
        throw FrontendError("malformed decimal '" + text + "'");
    }
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num * o.den + o.num * den, den * o.den);
}

Rational Rational::operator/(std::int64_t k) const {
    return Rational(num, den * k);
}

std::string Rational::to_fixed2() const {
    bool neg = num < 0;
    std::int64_t n = neg ? -num : num;
    // value * 100 = p / den; round half up
    std::int64_t p = n * 100;
    std::int64_t q = p / den;
    std::int64_t r = p % den;
    if (2 * r >= den) ++q;
    std::ostringstream ss;
    if (neg && q != 0) ss << '-';
    ss << q / 100 << '.' << (q / 10) % 10 << q % 10;
    return ss.str();
}

namespace {

void check_score(int score, const char* name) {
    if (score < 1 || score > 5)
        throw FrontendError(std::string(name) + " score out of range [1,5]: " +
                            std::to_string(score));
}

}  // namespace

MosTable mos_table(const std::vector<MosRecord>& records) {
    if (records.empty()) throw FrontendError("no MOS records");
    std::map<std::tuple<std::string, std::string, std::string>,
             std::pair<std::int64_t, std::int64_t>>
        sums;  // (sum, count)
    for (const MosRecord& r : records) {
        check_score(r.intelligibility, "intelligibility");
        check_score(r.naturalness, "naturalness");
        auto add = [&](const std::string& measure, int score) {
            auto& [sum, count] = sums[{r.text_language, r.voice_id, measure}];
            sum += score;
            ++count;
        };
        add("intelligibility", r.intelligibility);
        add("naturalness", r.naturalness);
    }
    std::vector<MosCell> cells;
    for (const auto& [key, sc] : sums) {
        const auto& [lang, voice, measure] = key;
        cells.push_back({lang, voice, measure, Rational(sc.first, sc.second)});
    }
    return mos_table_from_cells(cells);
}

MosTable mos_table_from_cells(const std::vector<MosCell>& cells) {
    if (cells.empty()) throw FrontendError("no MOS cells");
    MosTable table;
    std::map<std::pair<std::string, std::string>, std::vector<Rational>> groups;
    for (const MosCell& c : cells) {
        auto key = std::make_tuple(c.text_language, c.voice_id, c.measure);
        if (table.cells.count(key))
            throw FrontendError("duplicate MOS cell for (" + c.text_language +
                                ", " + c.voice_id + ", " + c.measure + ")");
        table.cells[key] = c.mean;
        groups[{c.voice_id, c.measure}].push_back(c.mean);
    }
    // grand mean: unweighted over per-language cell means
    for (const auto& [key, means] : groups) {
        Rational sum;
        for (const Rational& m : means) sum = sum + m;
        table.grand_means[key] = sum / static_cast<std::int64_t>(means.size());
    }
    return table;
}

std::map<std::pair<std::string, std::string>, AxyFractions> axy_preference(
    const std::vector<AxyRecord>& records) {
    if (records.empty()) throw FrontendError("no AXY records");
    std::map<std::pair<std::string, std::string>, std::array<std::size_t, 3>>
        counts;
    for (const AxyRecord& r : records) {
        if (r.system_x == r.system_y)
            throw FrontendError("AXY record with identical systems '" +
                                r.system_x + "'");
        auto& c = counts[{r.system_x, r.system_y}];
        switch (r.preference) {
            case AxyChoice::X: ++c[0]; break;
            case AxyChoice::Y: ++c[1]; break;
            case AxyChoice::Neither: ++c[2]; break;
        }
    }
    std::map<std::pair<std::string, std::string>, AxyFractions> out;
    for (const auto& [pair, c] : counts) {
        std::int64_t total = static_cast<std::int64_t>(c[0] + c[1] + c[2]);
        AxyFractions f;
        f.x = Rational(static_cast<std::int64_t>(c[0]), total);
        f.y = Rational(static_cast<std::int64_t>(c[1]), total);
        f.neither = Rational(static_cast<std::int64_t>(c[2]), total);
        f.count = c[0] + c[1] + c[2];
        out[pair] = f;
    }
    return out;
}

Confusion langid_confusion(const std::vector<LangIdRecord>& records) {
    if (records.empty()) throw FrontendError("no language-ID records");
    Confusion conf;
    std::size_t correct = 0;
    for (const LangIdRecord& r : records) {
        ++conf.matrix[{r.true_language, r.chosen_language}];
        if (r.true_language == r.chosen_language) ++correct;
    }
    conf.total = records.size();
    conf.accuracy = Rational(static_cast<std::int64_t>(correct),
                             static_cast<std::int64_t>(records.size()));
    return conf;
}

namespace {

// Deterministic bounded draw; avoids std::uniform_int_distribution, whose
// output differs across standard libraries.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % n;
}

template <typename T>
void seeded_shuffle(std::vector<T>& items, std::mt19937_64& rng) {
    for (std::size_t i = items.size(); i > 1; --i)
        std::swap(items[i - 1], items[bounded(rng, i)]);
}

}  // namespace

std::vector<SheetEntry> make_sheet(const std::vector<std::string>& stimuli,
                                   SheetDesign design, std::uint64_t seed) {
    if (stimuli.empty()) throw FrontendError("no stimuli");
    if (design == SheetDesign::AXY)
        throw FrontendError("AXY sheets require (A, X, Y) triples");
    std::vector<std::string> order = stimuli;
    std::mt19937_64 rng(seed);
    seeded_shuffle(order, rng);
    std::vector<SheetEntry> sheet;
    for (std::size_t i = 0; i < order.size(); ++i)
        sheet.push_back({i + 1, order[i], {}});
    return sheet;
}

std::vector<SheetEntry> make_axy_sheet(const std::vector<AxyItem>& items,
                                       std::uint64_t seed) {
    if (items.empty()) throw FrontendError("no stimuli");
    for (const AxyItem& item : items)
        if (item.sample_x == item.sample_y)
            throw FrontendError("AXY item '" + item.item_id +
                                "' has identical X and Y");
    std::vector<AxyItem> order = items;
    std::mt19937_64 rng(seed);
    seeded_shuffle(order, rng);
    std::vector<SheetEntry> sheet;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const AxyItem& item = order[i];
        bool swap_sides = bounded(rng, 2) == 1;
        std::string first = swap_sides ? item.sample_y : item.sample_x;
        std::string second = swap_sides ? item.sample_x : item.sample_y;
        sheet.push_back({i + 1, item.item_id, {item.reference, first, second}});
    }
    return sheet;
}

RatingsFile load_ratings(const std::string& text) {
    std::vector<NumberedLine> lines = content_lines(text);
    if (lines.empty()) throw FrontendError("empty ratings file");
    std::vector<std::string> header = split(lines[0].text, '\t');
    if (header.size() != 2 || header[0] != "design")
        throw FrontendError("ratings file must start with a design header",
                            lines[0].number);
    RatingsFile out;
    out.design = header[1];

    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& [lineno, line] = lines[i];
        std::vector<std::string> f = split(line, '\t');
        if (out.design == "mos") {
            if (f.size() != 5)
                throw FrontendError("malformed MOS record", lineno);
            MosRecord r;
            r.listener_id = f[0];
            r.text_language = f[1];
            r.voice_id = f[2];
            try {
                r.intelligibility = std::stoi(f[3]);
                r.naturalness = std::stoi(f[4]);
            } catch (const std::exception&) {
                throw FrontendError("malformed MOS score", lineno);
            }
            check_score(r.intelligibility, "intelligibility");
            check_score(r.naturalness, "naturalness");
            out.mos.push_back(std::move(r));
        } else if (out.design == "mos-cells") {
            if (f.size() != 4)
                throw FrontendError("malformed MOS cell record", lineno);
            if (f[2] != "intelligibility" && f[2] != "naturalness")
                throw FrontendError("unknown measure '" + f[2] + "'", lineno);
            out.mos_cells.push_back({f[0], f[1], f[2],
                                     Rational::from_decimal(f[3])});
        } else if (out.design == "axy") {
            if (f.size() != 5)
                throw FrontendError("malformed AXY record", lineno);
            AxyRecord r;
            r.listener_id = f[0];
            r.item_id = f[1];
            r.system_x = f[2];
            r.system_y = f[3];
            if (f[4] == "X") r.preference = AxyChoice::X;
            else if (f[4] == "Y") r.preference = AxyChoice::Y;
            else if (f[4] == "neither") r.preference = AxyChoice::Neither;
            else throw FrontendError("unknown preference '" + f[4] + "'", lineno);
            out.axy.push_back(std::move(r));
        } else if (out.design == "langid") {
            if (f.size() != 4)
                throw FrontendError("malformed language-ID record", lineno);
            out.langid.push_back({f[0], f[1], f[2], f[3]});
        } else {
            throw FrontendError("unknown design '" + out.design + "'",
                                lines[0].number);
        }
    }
    return out;
}

}  // namespace clsfe
