#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "gonet/plaquette.hpp"
#include "helpers.hpp"

using namespace gonet;

namespace {

using Cells = std::array<RelCell, 9>;

// Test-local symmetry group, built by closure from two generators with
// hard-coded index maps (independent of the library's transform tables):
// quarter turn and column mirror.
std::set<std::array<int, 9>> generated_group() {
    const std::array<int, 9> rot{6, 3, 0, 7, 4, 1, 8, 5, 2};
    const std::array<int, 9> mirror{2, 1, 0, 5, 4, 3, 8, 7, 6};
    const std::array<int, 9> identity{0, 1, 2, 3, 4, 5, 6, 7, 8};
    std::set<std::array<int, 9>> group{identity};
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& g : std::set(group))
            for (const auto& gen : {rot, mirror}) {
                std::array<int, 9> composed{};
                for (int i = 0; i < 9; ++i)
                    composed[i] = g[gen[i]];
                grew |= group.insert(composed).second;
            }
    }
    return group;
}

Cells permute(const Cells& p, const std::array<int, 9>& table) {
    Cells out{};
    for (int i = 0; i < 9; ++i)
        out[i] = p[table[i]];
    return out;
}

// All valid patterns in every orientation: interior, 4 edge sides, 4 corner Ls.
std::vector<Cells> all_valid_patterns() {
    std::vector<Cells> all;
    auto fill = [&](const std::vector<int>& off_board) {
        std::vector<int> free;
        for (int i = 0; i < 9; ++i)
            if (i != 4 && std::find(off_board.begin(), off_board.end(), i) == off_board.end())
                free.push_back(i);
        int total = 1;
        for (size_t i = 0; i < free.size(); ++i)
            total *= 3;
        for (int code = 0; code < total; ++code) {
            Cells p{};
            for (int i : off_board)
                p[i] = RelCell::OffBoard;
            int rest = code;
            for (int idx : free) {
                p[idx] = static_cast<RelCell>(rest % 3);
                rest /= 3;
            }
            all.push_back(p);
        }
    };
    fill({});
    fill({0, 1, 2});
    fill({6, 7, 8});
    fill({0, 3, 6});
    fill({2, 5, 8});
    fill({0, 1, 2, 3, 6});
    fill({0, 1, 2, 5, 8});
    fill({6, 7, 8, 0, 3});
    fill({6, 7, 8, 2, 5});
    return all;
}

}  // namespace

TEST_SUITE("plaquette") {

TEST_CASE("independent orbit census: 1107 classes split 954/135/18") {
    auto group = generated_group();
    REQUIRE(group.size() == 8);

    std::set<Cells> orbit_reps;
    std::map<int, int> per_geometry;  // off-board count -> orbits
    std::map<int, int> pattern_totals;
    for (const Cells& p : all_valid_patterns()) {
        int off = static_cast<int>(std::count(p.begin(), p.end(), RelCell::OffBoard));
        pattern_totals[off] += 1;
        Cells best = p;
        for (const auto& g : group)
            best = std::min(best, permute(p, g));
        if (orbit_reps.insert(best).second)
            per_geometry[off] += 1;
    }
    CHECK(pattern_totals[0] == 6561);
    CHECK(pattern_totals[3] == 4 * 243);
    CHECK(pattern_totals[5] == 4 * 27);
    CHECK(per_geometry[0] == 954);
    CHECK(per_geometry[3] == 135);
    CHECK(per_geometry[5] == 18);
    CHECK(orbit_reps.size() == 1107);

    // the library census agrees class for class
    ClassTable table = ClassTable::enumerate();
    REQUIRE(table.size() == 1107);
    std::set<Cells> library_reps;
    std::map<Geometry, int> library_geometry;
    for (const PlaquetteClass& cls : table.classes()) {
        library_reps.insert(cls.canonical.cells);
        library_geometry[cls.geometry] += 1;
    }
    CHECK(library_reps == orbit_reps);
    CHECK(library_geometry[Geometry::Interior] == 954);
    CHECK(library_geometry[Geometry::Edge] == 135);
    CHECK(library_geometry[Geometry::Corner] == 18);
}

TEST_CASE("orbit sizes sum back to the raw pattern counts") {
    ClassTable table = ClassTable::enumerate();
    std::map<Geometry, int> sums;
    for (const PlaquetteClass& cls : table.classes())
        sums[cls.geometry] += cls.orbit_size;
    CHECK(sums[Geometry::Interior] == 6561);
    CHECK(sums[Geometry::Edge] == 972);
    CHECK(sums[Geometry::Corner] == 108);
}

TEST_CASE("canonicalize: idempotent, orbit-invariant, minimal") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10000; ++trial) {
        RelativePattern p = test::random_valid_pattern(rng);
        RelativePattern canon = canonicalize(p);
        CHECK(canonicalize(canon) == canon);
        CHECK(canon <= p);
        for (const auto& table : dihedral_tables()) {
            RelativePattern image;
            for (int i = 0; i < 9; ++i)
                image.cells[i] = p.cells[table[i]];
            CHECK(canonicalize(image) == canon);
        }
    }
}

TEST_CASE("color swap is absorbed by relativization") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 2000; ++trial) {
        RawPattern raw{};
        for (int i = 0; i < 9; ++i) {
            int r = test::rand_int(rng, 0, 2);
            raw[i] = r == 0 ? Cell::Empty : r == 1 ? Cell::Black : Cell::White;
        }
        raw[4] = Cell::Empty;
        RawPattern swapped = raw;
        for (int i = 0; i < 9; ++i) {
            if (swapped[i] == Cell::Black)
                swapped[i] = Cell::White;
            else if (swapped[i] == Cell::White)
                swapped[i] = Cell::Black;
        }
        CHECK(relativize(raw, Color::Black) == relativize(swapped, Color::White));
        CHECK(relativize(raw, Color::White) == relativize(swapped, Color::Black));
    }
    RawPattern occupied_center{};
    occupied_center[4] = Cell::Black;
    CHECK_THROWS_AS(relativize(occupied_center, Color::Black), DataError);
}

TEST_CASE("enumeration is deterministic and ids are frozen") {
    ClassTable a = ClassTable::enumerate();
    ClassTable b = ClassTable::enumerate();
    REQUIRE(a.size() == b.size());
    for (size_t id = 0; id < a.size(); ++id) {
        CHECK(a.at(id).canonical == b.at(id).canonical);
        CHECK(a.at(id).geometry == b.at(id).geometry);
        CHECK(a.at(id).orbit_size == b.at(id).orbit_size);
    }

    // ids pinned by the ascending-encoding rule
    RelativePattern all_empty_interior{};
    CHECK(a.class_of(all_empty_interior) == 0);

    RelativePattern all_empty_edge{};
    for (int i : {6, 7, 8})
        all_empty_edge.cells[i] = RelCell::OffBoard;
    CHECK(a.class_of(all_empty_edge) == 18);

    RelativePattern all_empty_corner{};
    for (int i : {0, 3, 6, 7, 8})
        all_empty_corner.cells[i] = RelCell::OffBoard;
    CHECK(a.class_of(all_empty_corner) == 499);

    // the three all-empty geometries are three distinct classes
    CHECK(a.class_of(all_empty_edge) != a.class_of(all_empty_interior));
    CHECK(a.class_of(all_empty_corner) != a.class_of(all_empty_edge));
}

TEST_CASE("class lookup is total on valid patterns and orbit-stable") {
    ClassTable table = ClassTable::enumerate();
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 1000; ++trial) {
        RelativePattern p = test::random_valid_pattern(rng);
        uint16_t id = table.class_of(p);
        CHECK(id < 1107);
        const auto& rot180 = dihedral_tables()[2];
        RelativePattern rotated;
        for (int i = 0; i < 9; ++i)
            rotated.cells[i] = p.cells[rot180[i]];
        CHECK(table.class_of(rotated) == id);
    }

    RelativePattern bogus{};  // single off-board cell is not a legal footprint
    bogus.cells[0] = RelCell::OffBoard;
    CHECK(!is_valid_pattern(bogus));
    CHECK_THROWS_AS(table.class_of(bogus), DataError);
}

TEST_CASE("ascii rendering") {
    ClassTable table = ClassTable::enumerate();
    CHECK(render_ascii(table.at(0)) == "...\n.+.\n...\n");

    RelativePattern all_empty_corner{};
    for (int i : {0, 3, 6, 7, 8})
        all_empty_corner.cells[i] = RelCell::OffBoard;
    CHECK(render_ascii(table.at(table.class_of(all_empty_corner))) == "..#\n.+#\n###\n");

    RelativePattern one_friend{};
    one_friend.cells[0] = RelCell::Friend;
    std::string art = render_ascii(table.at(table.class_of(one_friend)));
    CHECK(std::count(art.begin(), art.end(), 'X') == 1);
    CHECK(std::count(art.begin(), art.end(), '+') == 1);
}

TEST_CASE("neighborhood -> relativize -> class pipeline on a real board") {
    ClassTable table = ClassTable::enumerate();
    Board board;
    CHECK(table.class_of(board.neighborhood(Coord{10, 10}), Color::Black) == 0);
    CHECK(table.class_of(board.neighborhood(Coord{1, 1}), Color::White) == 499);
    CHECK(table.class_of(board.neighborhood(Coord{10, 1}), Color::Black) == 18);
    // interior starts one line in from the edge
    CHECK(table.class_of(board.neighborhood(Coord{2, 10}), Color::Black) == 0);
}

}  // TEST_SUITE
