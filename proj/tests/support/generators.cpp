#include "support/generators.hpp"

#include "tempnet/json_io.hpp"

#ifndef TEMPNET_FIXTURE_DIR
#error "TEMPNET_FIXTURE_DIR must point at the bundled fixture directory"
#endif

namespace corpus {

tempnet::SparsityPattern random_pattern(tempnet::Rng& rng, int rows, int cols, double density) {
    tempnet::SparsityPattern p(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (rng.unit() < density)
                p.insert(r, c);
    return p;
}

tempnet::TemporalNetwork random_network(tempnet::Rng& rng, int n, int N, int max_m,
                                        double density_a, double density_b) {
    tempnet::TemporalNetwork net;
    net.n = n;
    for (int i = 0; i < N; ++i) {
        const int m = i == 0 ? rng.uniform_int(1, max_m) : rng.uniform_int(0, max_m);
        tempnet::StructuredPair pair;
        pair.a = random_pattern(rng, n, n, density_a);
        pair.b = random_pattern(rng, n, m, density_b);
        net.pairs.push_back(pair);
    }
    return net;
}

tempnet::TemporalNetwork random_dedicated_network(tempnet::Rng& rng, int n, int N, int max_m) {
    tempnet::TemporalNetwork net;
    net.n = n;
    for (int i = 0; i < N; ++i) {
        const int m = rng.uniform_int(1, max_m);
        tempnet::StructuredPair pair;
        pair.a = random_pattern(rng, n, n, 0.4);
        pair.b = tempnet::SparsityPattern(n, m);
        for (int k = 0; k < m; ++k)
            pair.b.insert(rng.uniform_int(0, n - 1), k);
        net.pairs.push_back(pair);
    }
    return net;
}

std::vector<tempnet::StructuredPair> all_pairs(int n) {
    std::vector<tempnet::StructuredPair> out;
    const int a_bits = n * n;
    const int b_bits = n;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (a_bits + b_bits)); ++code) {
        tempnet::StructuredPair pair;
        pair.a = tempnet::SparsityPattern(n, n);
        pair.b = tempnet::SparsityPattern(n, 1);
        for (int bit = 0; bit < a_bits; ++bit)
            if ((code >> bit) & 1u)
                pair.a.insert(bit / n, bit % n);
        for (int bit = 0; bit < b_bits; ++bit)
            if ((code >> (a_bits + bit)) & 1u)
                pair.b.insert(bit, 0);
        out.push_back(pair);
    }
    return out;
}

tempnet::TemporalNetwork load_fixture(const std::string& name) {
    return tempnet::load_network(std::string(TEMPNET_FIXTURE_DIR) + "/" + name + ".json");
}

} // namespace corpus
