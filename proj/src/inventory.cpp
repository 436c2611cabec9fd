#include "clsfe/inventory.hpp"

#include <cmath>
#include <sstream>

namespace clsfe {
namespace {

template <typename Enum>
Enum parse_enum(const std::string& value,
                const std::vector<std::pair<std::string, Enum>>& table,
                const char* field, std::size_t line) {
    for (const auto& [name, v] : table)
        if (value == name) return v;
    throw FrontendError(std::string("unknown ") + field + " value '" + value + "'",
                        line);
}

const std::vector<std::pair<std::string, Length>> kLengths = {
    {"short", Length::Short}, {"long", Length::Long},
    {"diphthong", Length::Diphthong}, {"na", Length::NA}};
const std::vector<std::pair<std::string, Height>> kHeights = {
    {"high", Height::High}, {"mid", Height::Mid}, {"low", Height::Low},
    {"na", Height::NA}};
const std::vector<std::pair<std::string, Backness>> kBacknesses = {
    {"front", Backness::Front}, {"central", Backness::Central},
    {"back", Backness::Back}, {"na", Backness::NA}};
const std::vector<std::pair<std::string, Place>> kPlaces = {
    {"bilabial", Place::Bilabial}, {"labiodental", Place::Labiodental},
    {"dental", Place::Dental}, {"alveolar", Place::Alveolar},
    {"retroflex", Place::Retroflex}, {"palatal", Place::Palatal},
    {"velar", Place::Velar}, {"glottal", Place::Glottal}, {"na", Place::NA}};
const std::vector<std::pair<std::string, Manner>> kManners = {
    {"stop", Manner::Stop}, {"nasal", Manner::Nasal},
    {"fricative", Manner::Fricative}, {"affricate", Manner::Affricate},
    {"approximant", Manner::Approximant}, {"trill", Manner::Trill},
    {"flap", Manner::Flap}, {"na", Manner::NA}};

bool parse_bool(const std::string& value, const char* field, std::size_t line) {
    if (value == "true") return true;
    if (value == "false") return false;
    throw FrontendError(std::string("unknown ") + field + " value '" + value + "'",
                        line);
}

double parse_rational(const std::string& text, std::size_t line) {
    std::size_t slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            double num = std::stod(text.substr(0, slash));
            double den = std::stod(text.substr(slash + 1));
            if (den == 0) throw FrontendError("zero denominator", line);
            return num / den;
        }
        return std::stod(text);
    } catch (const std::invalid_argument&) {
        throw FrontendError("malformed rational '" + text + "'", line);
    }
}

// Articulation-point coordinates. Coronals cluster so a retroflex is nearer
// a dental than a velar.
double place_coord(Place p) {
    switch (p) {
        case Place::Bilabial: return 0.0;
        case Place::Labiodental: return 1.0;
        case Place::Dental: return 3.0;
        case Place::Alveolar: return 3.5;
        case Place::Retroflex: return 4.5;
        case Place::Palatal: return 6.0;
        case Place::Velar: return 8.0;
        case Place::Glottal: return 9.5;
        case Place::NA: return 0.0;
    }
    return 0.0;
}

double ordinal(Height h) {
    switch (h) {
        case Height::High: return 0.0;
        case Height::Mid: return 1.0;
        case Height::Low: return 2.0;
        case Height::NA: return 0.0;
    }
    return 0.0;
}

double ordinal(Backness b) {
    switch (b) {
        case Backness::Front: return 0.0;
        case Backness::Central: return 1.0;
        case Backness::Back: return 2.0;
        case Backness::NA: return 0.0;
    }
    return 0.0;
}

void check_invariants(const ClsPhone& p, std::size_t line) {
    const PhoneFeatures& f = p.features;
    switch (f.category) {
        case Category::Vowel:
            if (f.place != Place::NA || f.manner != Manner::NA)
                throw FrontendError("vowel '" + p.label +
                                    "' may not carry place/manner", line);
            if (f.length == Length::NA)
                throw FrontendError("vowel '" + p.label + "' requires length",
                                    line);
            break;
        case Category::Consonant:
            if (f.vowel_height != Height::NA || f.vowel_backness != Backness::NA ||
                f.length != Length::NA)
                throw FrontendError("consonant '" + p.label +
                                    "' may not carry vowel features", line);
            if (f.place == Place::NA || f.manner == Manner::NA)
                throw FrontendError("consonant '" + p.label +
                                    "' requires place and manner", line);
            break;
        case Category::Silence:
            if (f != PhoneFeatures{})
                throw FrontendError("silence '" + p.label +
                                    "' may not carry features", line);
            break;
    }
}

}  // namespace

double feature_distance(const ClsPhone& a, const ClsPhone& b,
                        const FeatureWeights& w) {
    if (a.label == b.label) return 0.0;
    const PhoneFeatures& fa = a.features;
    const PhoneFeatures& fb = b.features;
    double d = 0.0;
    if (fa.category != fb.category) d += w.category;

    if (fa.place != fb.place) {
        if (fa.place == Place::NA || fb.place == Place::NA)
            d += w.place;
        else
            d += w.place * std::abs(place_coord(fa.place) - place_coord(fb.place));
    }
    if (fa.manner != fb.manner) d += w.manner;
    if (fa.length != fb.length) d += w.length;
    if (fa.vowel_height != fb.vowel_height) {
        if (fa.vowel_height == Height::NA || fb.vowel_height == Height::NA)
            d += w.vowel_height;
        else
            d += w.vowel_height *
                 std::abs(ordinal(fa.vowel_height) - ordinal(fb.vowel_height));
    }
    if (fa.vowel_backness != fb.vowel_backness) {
        if (fa.vowel_backness == Backness::NA || fb.vowel_backness == Backness::NA)
            d += w.vowel_backness;
        else
            d += w.vowel_backness *
                 std::abs(ordinal(fa.vowel_backness) - ordinal(fb.vowel_backness));
    }
    if (fa.voiced != fb.voiced) d += w.voiced;
    if (fa.aspirated != fb.aspirated) d += w.aspirated;
    if (fa.nasalized != fb.nasalized) d += w.nasalized;

    // distinct labels must never be at distance zero
    if (d == 0.0) d = w.epsilon;
    return d;
}

ClsInventory ClsInventory::load(const std::string& table_text) {
    ClsInventory inv;
    struct LangRow {
        std::size_t line;
        std::string lang;
        std::vector<std::string> labels;
    };
    std::vector<LangRow> lang_rows;

    for (const auto& [lineno, line] : content_lines(table_text)) {
        std::vector<std::string> fields = split(line, '\t');
        if (fields[0] == "@lang") {
            if (fields.size() != 3)
                throw FrontendError("malformed @lang row", lineno);
            std::vector<std::string> labels;
            if (!fields[2].empty())
                for (const std::string& l : split(fields[2], ','))
                    labels.push_back(l);
            lang_rows.push_back({lineno, fields[1], labels});
            continue;
        }
        if (fields[0] == "@weight") {
            if (fields.size() != 3)
                throw FrontendError("malformed @weight row", lineno);
            double v = parse_rational(fields[2], lineno);
            FeatureWeights& w = inv.weights_;
            const std::string& f = fields[1];
            if (f == "category") w.category = v;
            else if (f == "place") w.place = v;
            else if (f == "manner") w.manner = v;
            else if (f == "voiced") w.voiced = v;
            else if (f == "aspirated") w.aspirated = v;
            else if (f == "nasalized") w.nasalized = v;
            else if (f == "length") w.length = v;
            else if (f == "vowel_height") w.vowel_height = v;
            else if (f == "vowel_backness") w.vowel_backness = v;
            else if (f == "epsilon") w.epsilon = v;
            else throw FrontendError("unknown weight field '" + f + "'", lineno);
            continue;
        }

        if (fields.size() < 2 || fields.size() > 3)
            throw FrontendError("malformed phone row", lineno);
        ClsPhone phone;
        phone.label = fields[0];
        if (phone.label.empty())
            throw FrontendError("empty phone label", lineno);
        if (phone.label.find('#') != std::string::npos ||
            phone.label.find(' ') != std::string::npos ||
            phone.label.find('\t') != std::string::npos)
            throw FrontendError("illegal character in label '" + phone.label + "'",
                                lineno);
        if (inv.superset_.count(phone.label))
            throw FrontendError("duplicate label '" + phone.label + "'", lineno);

        const std::string& cat = fields[1];
        if (cat == "vowel") phone.features.category = Category::Vowel;
        else if (cat == "consonant") phone.features.category = Category::Consonant;
        else if (cat == "silence") phone.features.category = Category::Silence;
        else throw FrontendError("unknown category '" + cat + "'", lineno);

        if (fields.size() == 3 && !fields[2].empty()) {
            for (const std::string& kv : split(fields[2], ',')) {
                std::size_t eq = kv.find('=');
                if (eq == std::string::npos)
                    throw FrontendError("malformed feature '" + kv + "'", lineno);
                std::string key = kv.substr(0, eq);
                std::string value = kv.substr(eq + 1);
                PhoneFeatures& f = phone.features;
                if (key == "length")
                    f.length = parse_enum(value, kLengths, "length", lineno);
                else if (key == "height")
                    f.vowel_height = parse_enum(value, kHeights, "height", lineno);
                else if (key == "backness")
                    f.vowel_backness =
                        parse_enum(value, kBacknesses, "backness", lineno);
                else if (key == "place")
                    f.place = parse_enum(value, kPlaces, "place", lineno);
                else if (key == "manner")
                    f.manner = parse_enum(value, kManners, "manner", lineno);
                else if (key == "voiced")
                    f.voiced = parse_bool(value, "voiced", lineno);
                else if (key == "aspirated")
                    f.aspirated = parse_bool(value, "aspirated", lineno);
                else if (key == "nasalized")
                    f.nasalized = parse_bool(value, "nasalized", lineno);
                else
                    throw FrontendError("unknown feature key '" + key + "'",
                                        lineno);
            }
        }
        check_invariants(phone, lineno);
        inv.superset_.emplace(phone.label, std::move(phone));
    }

    if (inv.superset_.empty()) throw FrontendError("no phones defined");

    for (const LangRow& row : lang_rows) {
        std::set<std::string> seen;
        for (const std::string& label : row.labels) {
            if (!inv.superset_.count(label))
                throw FrontendError("language '" + row.lang +
                                        "' references unknown label '" + label + "'",
                                    row.line);
            if (!seen.insert(label).second)
                throw FrontendError("language '" + row.lang +
                                        "' lists label '" + label + "' twice",
                                    row.line);
        }
        if (inv.per_language_.count(row.lang))
            throw FrontendError("duplicate language '" + row.lang + "'", row.line);
        inv.per_language_.emplace(row.lang, row.labels);
    }
    return inv;
}

ClsInventory ClsInventory::load_file(const std::string& path) {
    return load(read_file(path));
}

bool ClsInventory::has(const std::string& label) const {
    return superset_.count(label) != 0;
}

const ClsPhone& ClsInventory::phone(const std::string& label) const {
    auto it = superset_.find(label);
    if (it == superset_.end())
        throw FrontendError("unknown phone label '" + label + "'");
    return it->second;
}

bool ClsInventory::has_language(const std::string& lang) const {
    return per_language_.count(lang) != 0;
}

std::vector<ClsPhone> ClsInventory::phones_for_language(
    const std::string& lang) const {
    auto it = per_language_.find(lang);
    if (it == per_language_.end())
        throw FrontendError("unknown language code '" + lang + "'");
    std::vector<ClsPhone> out;
    out.reserve(it->second.size());
    for (const std::string& label : it->second) out.push_back(phone(label));
    return out;
}

std::set<std::string> ClsInventory::labels_for_language(
    const std::string& lang) const {
    auto it = per_language_.find(lang);
    if (it == per_language_.end())
        throw FrontendError("unknown language code '" + lang + "'");
    return {it->second.begin(), it->second.end()};
}

double ClsInventory::distance(const std::string& a, const std::string& b) const {
    return feature_distance(phone(a), phone(b), weights_);
}

std::string to_string(Category c) {
    switch (c) {
        case Category::Vowel: return "vowel";
        case Category::Consonant: return "consonant";
        case Category::Silence: return "silence";
    }
    return "?";
}
std::string to_string(Length l) {
    switch (l) {
        case Length::Short: return "short";
        case Length::Long: return "long";
        case Length::Diphthong: return "diphthong";
        case Length::NA: return "na";
    }
    return "?";
}
std::string to_string(Height h) {
    switch (h) {
        case Height::High: return "high";
        case Height::Mid: return "mid";
        case Height::Low: return "low";
        case Height::NA: return "na";
    }
    return "?";
}
std::string to_string(Backness b) {
    switch (b) {
        case Backness::Front: return "front";
        case Backness::Central: return "central";
        case Backness::Back: return "back";
        case Backness::NA: return "na";
    }
    return "?";
}
std::string to_string(Place p) {
    switch (p) {
        case Place::Bilabial: return "bilabial";
        case Place::Labiodental: return "labiodental";
        case Place::Dental: return "dental";
        case Place::Alveolar: return "alveolar";
        case Place::Retroflex: return "retroflex";
        case Place::Palatal: return "palatal";
        case Place::Velar: return "velar";
        case Place::Glottal: return "glottal";
        case Place::NA: return "na";
    }
    return "?";
}
std::string to_string(Manner m) {
    switch (m) {
        case Manner::Stop: return "stop";
        case Manner::Nasal: return "nasal";
        case Manner::Fricative: return "fricative";
        case Manner::Affricate: return "affricate";
        case Manner::Approximant: return "approximant";
        case Manner::Trill: return "trill";
        case Manner::Flap: return "flap";
        case Manner::NA: return "na";
    }
    return "?";
}

namespace {
std::string format_weight(double v) {
    std::ostringstream ss;
    ss << v;
    return ss.str();
}
}  // namespace

std::string ClsInventory::serialize() const {
    std::ostringstream out;
    for (const auto& [label, p] : superset_) {
        const PhoneFeatures& f = p.features;
        out << label << '\t' << to_string(f.category) << '\t';
        std::vector<std::string> kvs;
        switch (f.category) {
            case Category::Vowel:
                kvs.push_back("length=" + to_string(f.length));
                kvs.push_back("height=" + to_string(f.vowel_height));
                kvs.push_back("backness=" + to_string(f.vowel_backness));
                if (f.nasalized) kvs.push_back("nasalized=true");
                break;
            case Category::Consonant:
                kvs.push_back("place=" + to_string(f.place));
                kvs.push_back("manner=" + to_string(f.manner));
                kvs.push_back(std::string("voiced=") + (f.voiced ? "true" : "false"));
                kvs.push_back(std::string("aspirated=") +
                              (f.aspirated ? "true" : "false"));
                if (f.nasalized) kvs.push_back("nasalized=true");
                break;
            case Category::Silence:
                break;
        }
        for (std::size_t i = 0; i < kvs.size(); ++i)
            out << (i ? "," : "") << kvs[i];
        out << '\n';
    }
    for (const auto& [lang, labels] : per_language_) {
        out << "@lang\t" << lang << '\t';
        for (std::size_t i = 0; i < labels.size(); ++i)
            out << (i ? "," : "") << labels[i];
        out << '\n';
    }
    const FeatureWeights& w = weights_;
    out << "@weight\tcategory\t" << format_weight(w.category) << '\n';
    out << "@weight\tplace\t" << format_weight(w.place) << '\n';
    out << "@weight\tmanner\t" << format_weight(w.manner) << '\n';
    out << "@weight\tvoiced\t" << format_weight(w.voiced) << '\n';
    out << "@weight\taspirated\t" << format_weight(w.aspirated) << '\n';
    out << "@weight\tnasalized\t" << format_weight(w.nasalized) << '\n';
    out << "@weight\tlength\t" << format_weight(w.length) << '\n';
    out << "@weight\tvowel_height\t" << format_weight(w.vowel_height) << '\n';
    out << "@weight\tvowel_backness\t" << format_weight(w.vowel_backness) << '\n';
    out << "@weight\tepsilon\t" << format_weight(w.epsilon) << '\n';
    return out.str();
}

}  // namespace clsfe
