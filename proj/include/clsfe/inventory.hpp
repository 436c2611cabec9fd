#ifndef CLSFE_INVENTORY_HPP
#define CLSFE_INVENTORY_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "clsfe/util.hpp"

namespace clsfe {

enum class Category { Vowel, Consonant, Silence };
enum class Length { Short, Long, Diphthong, NA };
enum class Height { High, Mid, Low, NA };
enum class Backness { Front, Central, Back, NA };
enum class Place {
    Bilabial, Labiodental, Dental, Alveolar, Retroflex, Palatal, Velar,
    Glottal, NA
};
enum class Manner {
    Stop, Nasal, Fricative, Affricate, Approximant, Trill, Flap, NA
};

// Articulatory feature bundle. Inapplicable fields are NA/false: vowels have
// no place/manner, consonants no height/backness/length, silence nothing.
struct PhoneFeatures {
    Category category = Category::Silence;
    Length length = Length::NA;
    Height vowel_height = Height::NA;
    Backness vowel_backness = Backness::NA;
    Place place = Place::NA;
    Manner manner = Manner::NA;
    bool voiced = false;
    bool aspirated = false;
    bool nasalized = false;

    bool operator==(const PhoneFeatures&) const = default;
};

struct ClsPhone {
    std::string label;
    PhoneFeatures features;
};

// Field weights for feature_distance. Place differences scale with the
// distance between articulation points, so dental/alveolar/retroflex sit
// closer to each other than to velar.
struct FeatureWeights {
    double category = 100.0;
    double place = 4.0;
    double manner = 4.0;
    double voiced = 2.0;
    double aspirated = 1.0;
    double nasalized = 2.0;
    double length = 2.0;
    double vowel_height = 3.0;
    double vowel_backness = 3.0;
    // distance for phones whose bundles tie on every weighted field
    double epsilon = 0.5;
};

double feature_distance(const ClsPhone& a, const ClsPhone& b,
                        const FeatureWeights& weights);

// The CLS superset plus per-language inventory subsets, loaded from the
// line-oriented inventory file (see data/cls.tsv).
class ClsInventory {
public:
    static ClsInventory load(const std::string& table_text);
    static ClsInventory load_file(const std::string& path);

    bool has(const std::string& label) const;
    const ClsPhone& phone(const std::string& label) const;
    std::size_t size() const { return superset_.size(); }

    std::vector<ClsPhone> phones_for_language(const std::string& lang) const;
    bool has_language(const std::string& lang) const;
    std::set<std::string> labels_for_language(const std::string& lang) const;

    const FeatureWeights& weights() const { return weights_; }

    double distance(const std::string& a, const std::string& b) const;

    // Canonical text form; load(serialize()) reproduces the inventory.
    std::string serialize() const;

    const std::map<std::string, ClsPhone>& superset() const { return superset_; }

private:
    std::map<std::string, ClsPhone> superset_;
    std::map<std::string, std::vector<std::string>> per_language_;
    FeatureWeights weights_;
};

std::string to_string(Category c);
std::string to_string(Length l);
std::string to_string(Height h);
std::string to_string(Backness b);
std::string to_string(Place p);
std::string to_string(Manner m);

}  // namespace clsfe

#endif  // CLSFE_INVENTORY_HPP
