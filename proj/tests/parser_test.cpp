#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "clsfe/parser.hpp"
#include "test_util.hpp"

using namespace clsfe;
using clsfe_test::pipeline;

namespace {

std::vector<std::string> tokens_of(std::string_view text,
                                   const std::string& primary) {
    const Pipeline& p = pipeline();
    return parse_mixed(text, primary, p.tables, p.schwa, p.seg_config).tokens;
}

std::vector<Akshara> deva_aksharas(const std::string& word) {
    const RuleSet& rules = pipeline().tables.scripts.at(ScriptTag::Devanagari);
    return tokenize_aksharas(utf8_decode(word), rules);
}

TextSegment make_segment(const std::string& text, ScriptTag script,
                         const std::string& lang) {
    return {utf8_decode(text), script, lang};
}

}  // namespace

TEST_CASE("script table loading") {
    const ClsInventory& inv = pipeline().inventory;
    RuleSet rs = RuleSet::load(ScriptTag::Devanagari, "0915\tConsonant\tk\n", inv);
    CHECK(rs.rule_count() == 1);
    std::vector<char32_t> ka = {0x0915};
    const GraphemeRule* rule = rs.match(ka, 0);
    REQUIRE(rule != nullptr);
    CHECK(rule->cls == GraphemeClass::Consonant);
    CHECK(rule->labels == std::vector<std::string>{"k"});

    CHECK_THROWS_WITH_AS(
        RuleSet::load(ScriptTag::Devanagari, "0915\tConsonant\tqq\n", inv),
        doctest::Contains("unknown label 'qq'"), FrontendError);
    CHECK_THROWS_AS(RuleSet::load(ScriptTag::Devanagari,
                                  "0915\tConsonant\tk\n0915\tConsonant\tg\n", inv),
                    FrontendError);
    CHECK_THROWS_AS(RuleSet::load(ScriptTag::Devanagari, "", inv), FrontendError);
    CHECK_THROWS_AS(RuleSet::load(ScriptTag::Devanagari, "0915\tNoSuch\tk\n", inv),
                    FrontendError);
}

TEST_CASE("full Devanagari table has one rule per content line") {
    std::string text = read_file(clsfe_test::data_path("scripts/deva.tsv"));
    std::size_t content = content_lines(text).size();
    CHECK(pipeline().tables.scripts.at(ScriptTag::Devanagari).rule_count() ==
          content);
}

TEST_CASE("single consonant akshara") {
    auto aks = deva_aksharas("क");
    REQUIRE(aks.size() == 1);
    CHECK(aks[0].onset == std::vector<std::string>{"k"});
    CHECK(aks[0].vowel_kind == Akshara::VowelKind::Inherent);
}

TEST_CASE("virama merges cluster onsets") {
    auto aks = deva_aksharas("क्या");  // ka virama ya aa-sign
    REQUIRE(aks.size() == 1);
    CHECK(aks[0].onset == std::vector<std::string>{"k", "y"});
    CHECK(aks[0].vowel_kind == Akshara::VowelKind::Explicit);
    CHECK(aks[0].vowel_labels == std::vector<std::string>{"aa"});
    CHECK_FALSE(aks[0].explicit_virama);
}

TEST_CASE("word-final virama marks a vowelless akshara") {
    auto aks = deva_aksharas("विनयम्");
    REQUIRE(aks.size() == 4);
    CHECK(aks[3].vowel_kind == Akshara::VowelKind::None);
    CHECK(aks[3].explicit_virama);
}

TEST_CASE("orphan signs are located errors") {
    CHECK_THROWS_WITH_AS(deva_aksharas("ा"),
                         doctest::Contains("vowel sign"), FrontendError);
    CHECK_THROWS_WITH_AS(deva_aksharas("्क"),
                         doctest::Contains("dangling virama"), FrontendError);
    // dangling virama needs a consonant first; virama directly after a vowel
    CHECK_THROWS_AS(deva_aksharas("आ्"), FrontendError);
}

TEST_CASE("akshara phone emission under schwa policies") {
    Akshara ka;
    ka.onset = {"k"};
    CHECK(akshara_to_phones(ka, SchwaPolicy::Retain,
                            AksharaPosition::WordFinal) ==
          std::vector<std::string>{"k", "a"});
    CHECK(akshara_to_phones(ka, SchwaPolicy::DeleteFinalSchwa,
                            AksharaPosition::WordFinal) ==
          std::vector<std::string>{"k"});
    CHECK(akshara_to_phones(ka, SchwaPolicy::DeleteFinalSchwa,
                            AksharaPosition::NonFinal) ==
          std::vector<std::string>{"k", "a"});

    Akshara kii;
    kii.onset = {"k"};
    kii.vowel_kind = Akshara::VowelKind::Explicit;
    kii.vowel_labels = {"ii"};
    CHECK(akshara_to_phones(kii, SchwaPolicy::Retain,
                            AksharaPosition::WordFinal) ==
          std::vector<std::string>{"k", "ii"});
}

TEST_CASE("kamal under both policies") {
    CHECK(tokens_of("कमल", "hi") ==
          std::vector<std::string>{"k", "a", "m", "a", "l"});
    CHECK(tokens_of("कमल", "sa") ==
          std::vector<std::string>{"k", "a", "m", "a", "l", "a"});
}

TEST_CASE("namaste golden parse") {
    CHECK(tokens_of("नमस्ते", "hi") ==
          std::vector<std::string>{"n", "a", "m", "a", "s", "t", "ee"});
}

TEST_CASE("telugu ka matches devanagari ka") {
    CHECK(tokens_of("క", "te") == std::vector<std::string>{"k", "a"});
    CHECK(tokens_of("క", "te") == tokens_of("क", "sa"));
}

TEST_CASE("modifiers attach to the current akshara") {
    CHECK(tokens_of("मैं", "hi") == std::vector<std::string>{"m", "ai", "nB"});
    CHECK(tokens_of("हूँ", "hi") == std::vector<std::string>{"h", "uu", "nB"});
    CHECK(tokens_of("नमः", "sa") ==
          std::vector<std::string>{"n", "a", "m", "a", "hq"});
}

TEST_CASE("digits are spelled out digit by digit") {
    // Devanagari digit four rides the surrounding Devanagari segment
    auto toks = tokens_of("जल ४", "hi");
    CHECK(toks == std::vector<std::string>{"j", "a", "l", "#", "c", "aa", "r"});
    // ASCII digits inside a Devanagari context use the same names
    auto mixed = tokens_of("कमल 4", "hi");
    CHECK(mixed == std::vector<std::string>{"k", "a", "m", "a", "l", "#", "c",
                                            "aa", "r"});
}

TEST_CASE("empty segment is an error") {
    TextSegment seg = make_segment("  ", ScriptTag::Devanagari, "hi");
    CHECK_THROWS_WITH_AS(parse_segment(seg, pipeline().tables, pipeline().schwa),
                         doctest::Contains("empty segment"), FrontendError);
}

TEST_CASE("latin lexicon lookup folds case") {
    TextSegment ok = make_segment("ok", ScriptTag::Latin, "en");
    TextSegment upper = make_segment("OK", ScriptTag::Latin, "en");
    auto a = parse_latin(ok, pipeline().tables);
    auto b = parse_latin(upper, pipeline().tables);
    CHECK(a.tokens == std::vector<std::string>{"ow", "k"});
    CHECK(a.tokens == b.tokens);
}

TEST_CASE("letter-to-sound fallback for unknown words") {
    TextSegment seg = make_segment("zyx", ScriptTag::Latin, "en");
    CHECK(parse_latin(seg, pipeline().tables).tokens ==
          std::vector<std::string>{"z", "y", "k", "s"});
    // digraph rule beats per-letter rules
    TextSegment thin = make_segment("thin", ScriptTag::Latin, "en");
    CHECK(parse_latin(thin, pipeline().tables).tokens ==
          std::vector<std::string>{"th", "i", "n"});
}

TEST_CASE("latin words with embedded digits are rejected") {
    TextSegment seg = make_segment("ab1", ScriptTag::Latin, "en");
    CHECK_THROWS_WITH_AS(parse_latin(seg, pipeline().tables),
                         doctest::Contains("ab1"), FrontendError);
}

TEST_CASE("parse_mixed reduces to parse_latin for one segment") {
    TextSegment seg = make_segment("hello", ScriptTag::Latin, "en");
    CHECK(tokens_of("hello", "hi") ==
          parse_latin(seg, pipeline().tables).tokens);
}

TEST_CASE("code-switched utterance composes per-segment parses") {
    auto toks = tokens_of("मैं ok हूँ", "hi");
    CHECK(toks == std::vector<std::string>{"m", "ai", "nB", "#", "ow", "k", "#",
                                           "h", "uu", "nB"});
}

TEST_CASE("empty input is an error") {
    CHECK_THROWS_AS(tokens_of("", "hi"), FrontendError);
}

TEST_CASE("compositionality over the fixture corpora") {
    const Pipeline& p = pipeline();
    for (const char* fixture :
         {"fixtures/mixed_corpus.tsv", "fixtures/sanskrit_corpus.tsv",
          "fixtures/telugu_corpus.tsv"}) {
        std::string primary =
            std::string(fixture).find("sanskrit") != std::string::npos ? "sa"
            : std::string(fixture).find("telugu") != std::string::npos ? "te"
                                                                       : "hi";
        for (const auto& [lineno, line] :
             content_lines(read_file(clsfe_test::data_path(fixture)))) {
            std::string text = split(line, '\t')[1];
            LabelSequence whole = parse_mixed(text, primary, p.tables, p.schwa,
                                              p.seg_config);
            // manual join of per-segment parses
            std::vector<std::string> joined;
            for (const TextSegment& seg :
                 segment(std::string_view(text), primary, p.seg_config)) {
                LabelSequence part = seg.script == ScriptTag::Latin
                                         ? parse_latin(seg, p.tables)
                                         : parse_segment(seg, p.tables, p.schwa);
                if (!joined.empty()) joined.push_back(kWordBoundary);
                joined.insert(joined.end(), part.tokens.begin(),
                              part.tokens.end());
            }
            normalize_boundaries(joined);
            CHECK(whole.tokens == joined);
            // closure and boundary invariants
            REQUIRE(!whole.tokens.empty());
            CHECK(whole.tokens.front() != kWordBoundary);
            CHECK(whole.tokens.back() != kWordBoundary);
            for (std::size_t i = 0; i < whole.tokens.size(); ++i) {
                if (whole.tokens[i] == kWordBoundary) {
                    if (i > 0) CHECK(whole.tokens[i - 1] != kWordBoundary);
                } else {
                    CHECK(p.inventory.has(whole.tokens[i]));
                }
            }
        }
    }
}

TEST_CASE("fuzzed inputs fail only with located errors") {
    const Pipeline& p = pipeline();
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        std::vector<char32_t> text;
        std::size_t len = 1 + rng() % 24;
        for (std::size_t i = 0; i < len; ++i) {
            char32_t cp;
            switch (rng() % 4) {
                case 0: cp = 0x0900 + rng() % 0x80; break;
                case 1: cp = 0x0C00 + rng() % 0x180; break;
                case 2: cp = U'a' + rng() % 26; break;
                default: cp = U' ' + rng() % 0x4F; break;
            }
            text.push_back(cp);
        }
        try {
            LabelSequence seq = parse_mixed(utf8_encode(text), "hi", p.tables,
                                            p.schwa, p.seg_config);
            for (const std::string& t : seq.tokens)
                if (t != kWordBoundary) CHECK(p.inventory.has(t));
        } catch (const FrontendError&) {
            // located failure is the contract
        }
    }
}

TEST_CASE("label line round trip and validation") {
    LabelSequence seq;
    seq.utterance_id = "utt1";
    seq.tokens = {"k", "a", "#", "m", "a"};
    LabelSequence back = parse_label_line(seq.to_line());
    CHECK(back.utterance_id == "utt1");
    CHECK(back.tokens == seq.tokens);
    CHECK_THROWS_AS(parse_label_line("u\t# k"), FrontendError);
    CHECK_THROWS_AS(parse_label_line("u\tk # # a"), FrontendError);
    CHECK_THROWS_AS(parse_label_line("u\t"), FrontendError);
}
