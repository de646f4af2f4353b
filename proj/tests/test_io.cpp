#include "doctest.h"

#include <filesystem>

#include "loosepath/io.hpp"

using namespace loosepath;

TEST_CASE("blue_bits byte layout") {
    Coloring c(5, 2);
    CHECK(coloring_to_hex(c) == "0000");
    c.set({1, 2}, Color::Blue);
    CHECK(coloring_to_hex(c) == "0100");
    c.set({1, 3}, Color::Blue);
    c.set({2, 3}, Color::Blue);
    CHECK(coloring_to_hex(c) == "0700");
    Coloring d(5, 2);
    d.set_rank(8, Color::Blue);
    CHECK(coloring_to_hex(d) == "0001");
    d.set_rank(7, Color::Blue);
    CHECK(coloring_to_hex(d) == "8001");
    CHECK(coloring_to_hex(Coloring(5, 2, Color::Blue)) == "ff03");
}

TEST_CASE("hex round trip and rejection") {
    Coloring c(9, 4);
    for (std::uint64_t i = 0; i < c.edge_count(); i += 3) c.set_rank(i, Color::Blue);
    const std::string hex = coloring_to_hex(c);
    CHECK(hex.size() == 32);
    CHECK(coloring_from_hex(9, 4, hex) == c);
    CHECK(coloring_from_hex(5, 2, "FF03") == Coloring(5, 2, Color::Blue));
    CHECK_THROWS_AS(coloring_from_hex(5, 2, "ff"), FormatError);
    CHECK_THROWS_AS(coloring_from_hex(5, 2, "ff07"), FormatError);
    CHECK_THROWS_AS(coloring_from_hex(5, 2, "zz00"), FormatError);
}

TEST_CASE("coloring JSON") {
    Coloring c(5, 2);
    c.set({2, 3}, Color::Blue);
    const std::string text = coloring_to_json(c);
    CHECK(text == "{\"n_vertices\":5,\"r\":2,\"encoding\":\"colex-bitstring\",\"blue_bits\":\"0400\"}\n");
    CHECK(coloring_from_json(text) == c);

    CHECK_THROWS_AS(coloring_from_json("{"), FormatError);
    CHECK_THROWS_AS(coloring_from_json("{\"n_vertices\":5,\"r\":2,\"blue_bits\":\"0400\"}"), FormatError);
    CHECK_THROWS_AS(coloring_from_json("{\"n_vertices\":5,\"r\":2,\"encoding\":\"adjacency\",\"blue_bits\":\"0400\"}"),
                    FormatError);
    CHECK_THROWS_AS(coloring_from_json("{\"n_vertices\":\"5\",\"r\":2,\"encoding\":\"colex-bitstring\",\"blue_bits\":\"0400\"}"),
                    FormatError);
    CHECK_THROWS_AS(coloring_from_json("{\"n_vertices\":2,\"r\":3,\"encoding\":\"colex-bitstring\",\"blue_bits\":\"\"}"),
                    FormatError);
    CHECK_THROWS_AS(coloring_from_json("[1,2]"), FormatError);
}

TEST_CASE("witness JSON") {
    const Witness w{Color::Blue, {2, 4, {9, 3, 5, 6, 7, 8, 1, 2}}};
    const std::string text = witness_to_json(w);
    CHECK(text == "{\"color\":\"blue\",\"s\":2,\"r\":4,\"length\":3,\"vertices\":[9,3,5,6,7,8,1,2]}\n");
    CHECK(witness_from_json(text) == w);
    CHECK_THROWS_AS(witness_from_json("{\"color\":\"blue\",\"s\":2,\"r\":4,\"length\":2,\"vertices\":[9,3,5,6,7,8,1,2]}"),
                    FormatError);
    CHECK_THROWS_AS(witness_from_json("{\"color\":\"green\",\"s\":1,\"r\":2,\"length\":1,\"vertices\":[1,2]}"),
                    FormatError);
}

TEST_CASE("files") {
    const auto path = std::filesystem::temp_directory_path() / "loosepath_io_test.json";
    write_file(path, "abc\n");
    CHECK(read_file(path) == "abc\n");
    std::filesystem::remove(path);
    CHECK_THROWS_AS(read_file(path), FormatError);
}
