#ifndef SOCREC_TESTS_FIXTURES_HPP
#define SOCREC_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "socrec/dataset.hpp"
#include "support/trng.hpp"

namespace socrec::testing {

// The worked four-user, two-item example: User1 (2,5), User2 (-,6),
// User3 (5,5), User4 (2,1). The (User2, Item1) cell is the missing marker.
inline RatingsMatrix table2_matrix() {
    RatingsMatrix m;
    m.add({UserId{"User1"}, ItemId{"Item1"}, 2.0, {}});
    m.add({UserId{"User1"}, ItemId{"Item2"}, 5.0, {}});
    m.add({UserId{"User2"}, ItemId{"Item2"}, 6.0, {}});
    m.add({UserId{"User3"}, ItemId{"Item1"}, 5.0, {}});
    m.add({UserId{"User3"}, ItemId{"Item2"}, 5.0, {}});
    m.add({UserId{"User4"}, ItemId{"Item1"}, 2.0, {}});
    m.add({UserId{"User4"}, ItemId{"Item2"}, 1.0, {}});
    return m;
}

inline std::string table2_ratings_csv() {
    return "user_id,item_id,rating\n"
           "User1,Item1,2\n"
           "User1,Item2,5\n"
           "User2,Item1,0\n"
           "User2,Item2,6\n"
           "User3,Item1,5\n"
           "User3,Item2,5\n"
           "User4,Item1,2\n"
           "User4,Item2,1\n";
}

// Random sparse matrix: up to max_users users over item_count items, each
// cell present with probability 1/2, integer values in [1, 7]. Users that
// would end up with an empty row are omitted entirely.
inline RatingsMatrix random_matrix(Trng& rng, std::size_t max_users = 8,
                                   std::size_t item_count = 6) {
    RatingsMatrix m;
    const std::size_t users = rng.range(2, max_users);
    for (std::size_t u = 0; u < users; ++u) {
        const UserId uid{"U" + std::to_string(u + 1)};
        for (std::size_t i = 0; i < item_count; ++i) {
            if (!rng.chance(1, 2)) continue;
            const double value = static_cast<double>(rng.range(1, 7));
            m.add({uid, ItemId{"I" + std::to_string(i + 1)}, value, {}});
        }
    }
    return m;
}

// 20 context-tagged ratings over a small catalogue; covers every dimension,
// partial tagging, and untagged rows.
inline RatingsMatrix tagged_matrix() {
    auto tags = [](const char* loc, const char* time, const char* weather,
                   const char* emotion) {
        ContextTags t;
        if (*loc) t.location = loc;
        if (*time) t.time = time;
        if (*weather) t.weather = weather;
        if (*emotion) t.emotion = emotion;
        return t;
    };
    struct Row {
        const char *user, *item;
        double value;
        ContextTags context;
    };
    const std::vector<Row> rows = {
        {"U1", "I1", 5, tags("athens", "evening", "sunny", "happy")},
        {"U1", "I2", 3, tags("athens", "morning", "rainy", "sad")},
        {"U1", "I3", 4, tags("patras", "evening", "", "")},
        {"U2", "I1", 2, tags("athens", "", "sunny", "")},
        {"U2", "I2", 4, tags("", "evening", "", "happy")},
        {"U2", "I4", 5, tags("patras", "morning", "rainy", "sad")},
        {"U3", "I1", 3, tags("athens", "evening", "", "happy")},
        {"U3", "I3", 1, tags("", "", "", "")},
        {"U3", "I5", 4, tags("patras", "", "sunny", "")},
        {"U4", "I2", 2, tags("athens", "morning", "sunny", "happy")},
        {"U4", "I4", 3, tags("", "evening", "rainy", "")},
        {"U4", "I5", 5, tags("athens", "evening", "sunny", "sad")},
        {"U5", "I1", 4, tags("", "", "rainy", "happy")},
        {"U5", "I3", 2, tags("patras", "morning", "", "sad")},
        {"U5", "I6", 5, tags("athens", "", "", "")},
        {"U6", "I2", 3, tags("", "evening", "sunny", "")},
        {"U6", "I4", 4, tags("athens", "morning", "", "happy")},
        {"U6", "I6", 1, tags("patras", "evening", "rainy", "sad")},
        {"U7", "I5", 2, tags("", "", "", "happy")},
        {"U7", "I6", 4, tags("athens", "evening", "sunny", "")},
    };
    RatingsMatrix m;
    for (const auto& r : rows) m.add({UserId{r.user}, ItemId{r.item}, r.value, r.context});
    return m;
}

// Two planted 10-user communities with disjoint 10-item preference blocks.
// User ids interleave (even ids = block A, odd ids = block B) so the first
// two users in lexicographic order seed one cluster per community. Every
// member rates its whole block with the shared 5/4 alternating pattern;
// two users carry one low cross-block rating each (~1% noise).
inline Dataset planted_communities() {
    RatingsMatrix m;
    for (int u = 0; u < 20; ++u) {
        const bool block_a = (u % 2 == 0);
        const std::string uid = "u" + std::string(u < 10 ? "0" : "") + std::to_string(u);
        const char* prefix = block_a ? "ia" : "ib";
        for (int i = 0; i < 10; ++i) {
            const double value = (i % 2 == 0) ? 5.0 : 4.0;
            m.add({UserId{uid}, ItemId{prefix + std::to_string(i)}, value, {}});
        }
        if (u == 3 || u == 13) { // cross-block noise, one item each
            const char* other = block_a ? "ib" : "ia";
            m.add({UserId{uid}, ItemId{other + std::to_string((u * 7) % 10)}, 2.0, {}});
        }
    }
    SocialGraph g;
    for (int u = 0; u < 20; ++u) {
        const int next = (u + 2) % 20; // ring within each community
        auto name = [](int x) {
            return "u" + std::string(x < 10 ? "0" : "") + std::to_string(x);
        };
        g.add_edge({UserId{name(u)}, UserId{name(next)}, Relation::friendship});
    }
    return make_dataset(std::move(m), std::move(g));
}

} // namespace socrec::testing

#endif
