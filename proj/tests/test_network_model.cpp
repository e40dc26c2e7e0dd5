#include "qnet/network.hpp"

#include "qnet/errors.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <set>
#include <string>

using namespace qnet;

namespace {

const char* kDiamondDoc = R"({
  "nodes": ["a", "x", "y", "b"],
  "senders": ["a"],
  "receivers": ["b"],
  "edges": [
    {"u": "a", "v": "x", "channel": {"kind": "dephasing", "p": 0.1}},
    {"u": "a", "v": "y", "channel": {"kind": "dephasing", "p": 0.1}},
    {"u": "x", "v": "b", "channel": {"kind": "erasure", "p": 0.5}},
    {"u": "y", "v": "b", "channel": {"kind": "erasure", "p": 0.5}},
    {"u": "x", "v": "b", "channel": {"kind": "custom", "w": 0.25}}
  ]
})";

QuantumNetwork chain_arb() {
    return parse_network(R"({"nodes":["a","r","b"],"senders":["a"],"receivers":["b"],
        "edges":[{"u":"a","v":"r","channel":{"kind":"pure_loss","eta":0.5}},
                 {"u":"r","v":"b","channel":{"kind":"erasure","p":0.25}}]})");
}

Cut cut_with(const QuantumNetwork& net, const std::vector<std::string>& side_a) {
    Cut cut;
    cut.in_a.assign(net.nodes.size(), 0);
    for (const std::string& name : side_a) cut.in_a[net.node_index(name)] = 1;
    return cut;
}

} // namespace

TEST_SUITE_BEGIN("network model");

TEST_CASE("parses a single-edge document") {
    const QuantumNetwork net = parse_network(
        R"({"nodes":["a","b"],"senders":["a"],"receivers":["b"],
            "edges":[{"u":"a","v":"b","channel":{"kind":"pure_loss","eta":0.5}}]})");
    CHECK(net.nodes.size() == 2);
    CHECK(net.edges.size() == 1);
    CHECK(net.senders == std::vector<std::size_t>{0});
    CHECK(net.receivers == std::vector<std::size_t>{1});
    CHECK(net.edges[0].channel.kind == ChannelKind::pure_loss);
    CHECK(net.edges[0].channel.eta == 0.5);
}

TEST_CASE("rejects overlapping senders and receivers") {
    CHECK_THROWS_WITH_AS(
        parse_network(R"({"nodes":["a","b"],"senders":["a"],"receivers":["a","b"],
            "edges":[{"u":"a","v":"b","channel":{"kind":"ideal"}}]})"),
        doctest::Contains("disjoint"), validation_error);
}

TEST_CASE("rejects schema violations with positions") {
    CHECK_THROWS_WITH_AS(parse_network("{"), doctest::Contains("malformed JSON"),
                         validation_error);
    CHECK_THROWS_WITH_AS(
        parse_network(R"({"nodes":["a","b"],"senders":["a"],"receivers":["b"],"edges":[],"x":1})"),
        doctest::Contains("unknown field 'x'"), validation_error);
    CHECK_THROWS_WITH_AS(
        parse_network(R"({"nodes":["a","b"],"senders":["a"],"receivers":["b"],
            "edges":[{"u":"a","v":"b","channel":{"kind":"foo"}}]})"),
        doctest::Contains("unknown channel kind 'foo'"), validation_error);
    CHECK_THROWS_WITH_AS(
        parse_network(R"({"nodes":["a","b"],"senders":["a"],"receivers":["b"],
            "edges":[{"u":"a","v":"b","channel":{"kind":"pure_loss","eta":"x"}}]})"),
        doctest::Contains("edges[0].channel.eta"), validation_error);
    CHECK_THROWS_WITH_AS(
        parse_network(R"({"nodes":["a","b"],"senders":["a"],"receivers":["b"],
            "edges":[{"u":"a","v":"a","channel":{"kind":"ideal"}}]})"),
        doctest::Contains("self-loop"), validation_error);
    CHECK_THROWS_WITH_AS(
        parse_network(R"({"nodes":["a","b"],"senders":["a"],"receivers":["b"],
            "edges":[{"u":"a","v":"c","channel":{"kind":"ideal"}}]})"),
        doctest::Contains("not a declared node"), validation_error);
    CHECK_THROWS_WITH_AS(
        parse_network(R"({"nodes":["a","a","b"],"senders":["a"],"receivers":["b"],"edges":[]})"),
        doctest::Contains("repeated"), validation_error);
    CHECK_THROWS_WITH_AS(
        parse_network(R"({"nodes":["a","b"],"senders":[],"receivers":["b"],"edges":[]})"),
        doctest::Contains("sender"), validation_error);
    CHECK_THROWS_WITH_AS(
        parse_network(R"({"nodes":["a","b"],"senders":["a"],"receivers":["b"],
            "edges":[{"u":"a","v":"b","channel":{"kind":"pure_loss","eta":0.5,"p":1}}]})"),
        doctest::Contains("unknown field 'p'"), validation_error);
}

TEST_CASE("reference document with parallel edges") {
    const QuantumNetwork net = parse_network(R"({"nodes": ["a","r","b1","b2"],
 "senders": ["a"],
 "receivers": ["b1","b2"],
 "edges": [
   {"u":"a","v":"r","channel":{"kind":"pure_loss","eta":0.75}},
   {"u":"r","v":"b1","channel":{"kind":"ideal"}},
   {"u":"r","v":"b2","channel":{"kind":"dephasing","p":0.1}},
   {"u":"r","v":"b2","channel":{"kind":"custom","w":0.42}}]})");
    CHECK(net.nodes.size() == 4);
    REQUIRE(net.edges.size() == 4);
    CHECK(net.edges[2].u == net.edges[3].u);
    CHECK(net.edges[2].v == net.edges[3].v);
    CHECK(edge_weight(net.edges[0].channel).value == doctest::Approx(2.0));
    CHECK(std::isinf(edge_weight(net.edges[1].channel).value));
    CHECK(edge_weight(net.edges[2].channel).value ==
          doctest::Approx(0.5310044064107188).epsilon(1e-12));
    CHECK(edge_weight(net.edges[3].channel).value == 0.42);
    CHECK(parse_network(serialize_network(net)) == net);
}

TEST_CASE("parallel edges survive a parse/serialize round trip") {
    const QuantumNetwork net = parse_network(kDiamondDoc);
    CHECK(net.edges.size() == 5);

    const std::string canon = serialize_network(net);
    const QuantumNetwork reparsed = parse_network(canon);
    CHECK(reparsed == net);
    CHECK(serialize_network(reparsed) == canon);
}

TEST_CASE("round trip is identity on random networks") {
    std::mt19937 rng(67);
    for (int rep = 0; rep < 50; ++rep) {
        const QuantumNetwork net = qnet::testing::random_network(rng);
        const std::string canon = serialize_network(net);
        const QuantumNetwork reparsed = parse_network(canon);
        CHECK(reparsed == net);
        CHECK(serialize_network(reparsed) == canon);
    }
}

TEST_CASE("cut sets") {
    const QuantumNetwork chain = chain_arb();
    CHECK(cut_set(chain, cut_with(chain, {"a"})) == std::vector<std::size_t>{0});
    CHECK(cut_set(chain, cut_with(chain, {"a", "r"})) == std::vector<std::size_t>{1});

    const QuantumNetwork diamond = parse_network(kDiamondDoc);
    CHECK(cut_set(diamond, cut_with(diamond, {"a", "x"})) ==
          std::vector<std::size_t>{1, 2, 4});

    CHECK_THROWS_AS(cut_set(chain, cut_with(chain, {"r"})), std::invalid_argument);
    CHECK_THROWS_AS(cut_set(chain, cut_with(chain, {"a", "b"})), std::invalid_argument);
}

TEST_CASE("cut set is symmetric under swapping the bipartition") {
    const QuantumNetwork net = parse_network(kDiamondDoc);
    QuantumNetwork swapped = net;
    std::swap(swapped.senders, swapped.receivers);
    const Cut cut = cut_with(net, {"a", "x"});
    Cut flipped;
    flipped.in_a.assign(net.nodes.size(), 0);
    for (std::size_t i = 0; i < net.nodes.size(); ++i) flipped.in_a[i] = !cut.in_a[i];
    CHECK(cut_set(net, cut) == cut_set(swapped, flipped));
}

TEST_CASE("multi-edge ree flow") {
    const QuantumNetwork two = parse_network(
        R"({"nodes":["a","x","b"],"senders":["a"],"receivers":["b"],
            "edges":[{"u":"a","v":"x","channel":{"kind":"pure_loss","eta":0.5}}]})");
    CHECK(multi_edge_ree_flow(two, cut_with(two, {"a"})) == doctest::Approx(1.0).epsilon(1e-12));
    // receiver disconnected: the cut along the component has an empty cut set
    CHECK(multi_edge_ree_flow(two, cut_with(two, {"a", "x"})) == 0.0);

    const QuantumNetwork mixed = parse_network(
        R"({"nodes":["a","b"],"senders":["a"],"receivers":["b"],
            "edges":[{"u":"a","v":"b","channel":{"kind":"ideal"}},
                     {"u":"a","v":"b","channel":{"kind":"dephasing","p":0.1}}]})");
    CHECK(std::isinf(multi_edge_ree_flow(mixed, cut_with(mixed, {"a"}))));
}

TEST_CASE("cut enumeration order and count") {
    const QuantumNetwork two = parse_network(
        R"({"nodes":["a","b"],"senders":["a"],"receivers":["b"],
            "edges":[{"u":"a","v":"b","channel":{"kind":"ideal"}}]})");
    CutEnumerator single(two);
    CHECK(single.total() == 1);
    Cut cut;
    CHECK(single.next(cut));
    CHECK(cut.in_a == std::vector<char>{1, 0});
    CHECK_FALSE(single.next(cut));

    const QuantumNetwork chain = chain_arb();
    CutEnumerator pair(chain);
    CHECK(pair.total() == 2);
    REQUIRE(pair.next(cut));
    CHECK(cut.in_a == std::vector<char>{1, 0, 0});  // {a} first
    REQUIRE(pair.next(cut));
    CHECK(cut.in_a == std::vector<char>{1, 1, 0});  // then {a, r}
    CHECK_FALSE(pair.next(cut));

    const QuantumNetwork diamond = parse_network(kDiamondDoc);
    CutEnumerator four(diamond);
    CHECK(four.total() == 4);
}

TEST_CASE("cut enumeration yields distinct valid cuts for larger graphs") {
    // chain of 12 intermediate nodes -> 4096 cuts
    std::string doc = R"({"nodes":["s")";
    for (int i = 0; i < 12; ++i) doc += ",\"m" + std::to_string(i) + "\"";
    doc += R"(,"t"],"senders":["s"],"receivers":["t"],"edges":[)";
    std::string prev = "s";
    for (int i = 0; i < 12; ++i) {
        const std::string cur = "m" + std::to_string(i);
        if (i) doc += ",";
        doc += R"({"u":")" + prev + R"(","v":")" + cur + R"(","channel":{"kind":"ideal"}})";
        prev = cur;
    }
    doc += R"(,{"u":")" + prev + R"(","v":"t","channel":{"kind":"ideal"}}]})";

    const QuantumNetwork net = parse_network(doc);
    CutEnumerator en(net);
    CHECK(en.total() == 4096);
    std::set<std::vector<char>> seen;
    Cut cut;
    while (en.next(cut)) {
        CHECK(cut_is_valid(net, cut));
        seen.insert(cut.in_a);
    }
    CHECK(seen.size() == 4096);
}

TEST_CASE("enumeration limit raises a capacity error") {
    const QuantumNetwork diamond = parse_network(kDiamondDoc);
    CHECK_THROWS_WITH_AS(CutEnumerator(diamond, 1), doctest::Contains("max-flow"),
                         capacity_error);
}

TEST_CASE("validate_network diagnostics") {
    const QuantumNetwork ok = parse_network(kDiamondDoc);
    CHECK(validate_network(ok).warnings.empty());

    const QuantumNetwork split = parse_network(
        R"({"nodes":["a","b","c","d"],"senders":["a"],"receivers":["c"],
            "edges":[{"u":"a","v":"b","channel":{"kind":"ideal"}},
                     {"u":"c","v":"d","channel":{"kind":"ideal"}}]})");
    const Diagnostics diag = validate_network(split);
    REQUIRE(diag.ok());
    bool unreachable = false;
    bool trivially_zero = false;
    for (const std::string& w : diag.warnings) {
        if (w.find("unreachable") != std::string::npos) unreachable = true;
        if (w.find("trivially zero") != std::string::npos) trivially_zero = true;
    }
    CHECK(unreachable);
    CHECK(trivially_zero);

    const QuantumNetwork isolated = parse_network(
        R"({"nodes":["a","b","z"],"senders":["a"],"receivers":["b"],
            "edges":[{"u":"a","v":"b","channel":{"kind":"ideal"}}]})");
    REQUIRE(validate_network(isolated).warnings.size() == 1);
    CHECK(validate_network(isolated).warnings[0] == "node 'z' is isolated");

    QuantumNetwork dup;
    dup.nodes = {"a", "a"};
    dup.senders = {0};
    dup.receivers = {1};
    CHECK_FALSE(validate_network(dup).ok());
}

TEST_CASE("adding an edge never decreases any cut flow") {
    std::mt19937 rng(71);
    for (int rep = 0; rep < 30; ++rep) {
        QuantumNetwork net = qnet::testing::random_network(rng);
        if (net.free_nodes().size() > 10) continue;

        QuantumNetwork bigger = net;
        std::uniform_int_distribution<std::size_t> pick(0, net.nodes.size() - 1);
        std::size_t u = pick(rng);
        std::size_t v = pick(rng);
        if (u == v) v = (v + 1) % net.nodes.size();
        bigger.edges.push_back({u, v, qnet::testing::random_finite_channel(rng)});

        CutEnumerator en(net);
        Cut cut;
        while (en.next(cut)) {
            const double before = multi_edge_ree_flow(net, cut);
            const double after = multi_edge_ree_flow(bigger, cut);
            CHECK(before >= 0.0);
            CHECK(after >= before - 1e-12);
        }
    }
}

TEST_SUITE_END();
