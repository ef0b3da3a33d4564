#include "demishuffle/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace demishuffle {

Alphabet::Alphabet(int y_count) : y_count_(y_count) {
    if (y_count < 1)
        throw std::invalid_argument("alphabet needs at least one Y-letter");
}

Word Word::x_power(int k) {
    if (k < 0)
        throw std::invalid_argument("negative X-power");
    return Word(std::vector<Letter>(static_cast<std::size_t>(k), letter_x));
}

bool fits(const Word &w, const Alphabet &alphabet) {
    return std::ranges::all_of(w, [&](Letter l) { return alphabet.contains(l); });
}

Word concat(const Word &a, const Word &b) {
    std::vector<Letter> letters;
    letters.reserve(a.length() + b.length());
    letters.insert(letters.end(), a.begin(), a.end());
    letters.insert(letters.end(), b.begin(), b.end());
    return Word(std::move(letters));
}

Bidegree bidegree(const Word &w) {
    Bidegree deg;
    for (Letter l : w)
        (is_y(l) ? deg.y_degree : deg.x_degree)++;
    return deg;
}

MultiIndex::MultiIndex(std::vector<int> body, int tail)
    : MultiIndex(std::move(body), {}, tail) {}

MultiIndex::MultiIndex(std::vector<int> body, std::vector<int> labels, int tail)
    : body_(std::move(body)), labels_(std::move(labels)), tail_(tail) {
    if (labels_.empty())
        labels_.assign(body_.size(), 1); // default to Y_1 in every slot
    if (labels_.size() != body_.size())
        throw std::invalid_argument("label count must match depth");
    if (tail_ < 0 || std::ranges::any_of(body_, [](int k) { return k < 0; }))
        throw std::invalid_argument("multi-index entries must be non-negative");
    if (std::ranges::any_of(labels_, [](int l) { return l < 1; }))
        throw std::invalid_argument("labels must be positive");
}

int MultiIndex::size() const noexcept {
    int n = tail_;
    for (int k : body_)
        n += k;
    return n;
}

namespace {

std::vector<Letter> index_letters(const MultiIndex &k) {
    std::vector<Letter> letters;
    letters.reserve(static_cast<std::size_t>(k.word_length()));
    for (int i = 0; i < k.depth(); ++i) {
        letters.insert(letters.end(), static_cast<std::size_t>(k.body()[i]), letter_x);
        letters.push_back(static_cast<Letter>(k.labels()[i]));
    }
    letters.insert(letters.end(), static_cast<std::size_t>(k.tail()), letter_x);
    return letters;
}

} // namespace

std::strong_ordering operator<=>(const MultiIndex &a, const MultiIndex &b) {
    if (auto c = a.word_length() <=> b.word_length(); c != 0)
        return c;
    return index_letters(a) <=> index_letters(b);
}

Word index_to_word(const MultiIndex &k, const Alphabet &alphabet) {
    for (int label : k.labels())
        if (!alphabet.contains(static_cast<Letter>(label)))
            throw std::invalid_argument("label outside alphabet");
    return Word(index_letters(k));
}

MultiIndex word_to_index(const Word &w) {
    std::vector<int> body;
    std::vector<int> labels;
    int run = 0;
    for (Letter l : w) {
        if (is_y(l)) {
            body.push_back(run);
            labels.push_back(static_cast<int>(l));
            run = 0;
        } else {
            ++run;
        }
    }
    return MultiIndex(std::move(body), std::move(labels), run);
}

std::vector<Word> words_up_to(int max_length, const Alphabet &alphabet) {
    std::vector<Word> result{Word{}};
    std::size_t level_begin = 0;
    for (int len = 1; len <= max_length; ++len) {
        const std::size_t level_end = result.size();
        for (std::size_t i = level_begin; i < level_end; ++i) {
            for (Letter l = 0; l <= static_cast<Letter>(alphabet.y_count()); ++l)
                result.push_back(concat(result[i], Word::single(l)));
        }
        level_begin = level_end;
    }
    std::ranges::sort(result);
    return result;
}

std::vector<MultiIndex> indices_with_bidegree(int x_degree, std::span<const int> labels) {
    const int parts = static_cast<int>(labels.size()) + 1;
    std::vector<MultiIndex> result;
    std::vector<int> entries(static_cast<std::size_t>(parts));
    // enumerate compositions of x_degree into `parts` parts
    auto rec = [&](auto &&self, int slot, int remaining) -> void {
        if (slot == parts - 1) {
            entries[static_cast<std::size_t>(slot)] = remaining;
            std::vector<int> body(entries.begin(), entries.end() - 1);
            result.emplace_back(std::move(body), std::vector<int>(labels.begin(), labels.end()),
                                remaining);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            entries[static_cast<std::size_t>(slot)] = v;
            self(self, slot + 1, remaining - v);
        }
    };
    rec(rec, 0, x_degree);
    return result;
}

std::vector<MultiIndex> indices_up_to_length(int max_word_length, const Alphabet &alphabet) {
    std::vector<MultiIndex> result;
    for (const Word &w : words_up_to(max_word_length, alphabet))
        result.push_back(word_to_index(w));
    return result;
}

} // namespace demishuffle
