#include "ssdd/catalog.hpp"

// Base-block tables transcribed verbatim from the source article; column-major,
// blank table cells skipped. Generated from the transcription master; do not hand-edit.

namespace ssdd {

const std::vector<CatalogEntry>& catalog_list() {
    static const std::vector<CatalogEntry> entries = {
    {
        "dd-10", "DD", 10, 0, 0, true, 2,
        {
            {0,1,2,6}, {1,0,4,3},
            {2,0,5,8},
        },
        {2,1},
        30, 15,
        "",
        "Lemma 3, v=10 table",
        "col 1: 10 disjoint volume-2 trades; col 2: cyclical trade of volume 10",
    },
    {
        "dd-13", "DD", 13, 0, 0, true, 2,
        {
            {0,1,11,5}, {1,0,3,9},
            {0,1,6,4}, {6,5,0,2},
        },
        {2,2},
        52, 26,
        "",
        "Lemma 3, v=13 table",
        "cols 1-2: 13 disjoint volume-2 trades each",
    },
    {
        "dd-16", "DD", 16, 0, 0, true, 2,
        {
            {0,1,6,8}, {1,0,11,14},
            {4,1,0,10}, {12,0,3,14},
            {0,1,9,5},
        },
        {2,2,1},
        80, 40,
        "",
        "Lemma 3, v=16 table",
        "cols 1-2: 16 disjoint volume-2 trades each; col 3: cyclical trade of volume 16",
    },
    {
        "dd-19", "DD", 19, 0, 0, true, 2,
        {
            {0,6,1,3}, {15,7,1,0},
            {4,1,0,12}, {5,0,3,10},
            {0,1,8,10}, {2,0,6,15},
        },
        {2,2,2},
        114, 57,
        "",
        "Lemma 3, v=19 table",
        "cols 1-3: 19 disjoint volume-2 trades each",
    },
    {
        "dd-22", "DD", 22, 0, 0, true, 2,
        {
            {0,3,1,6}, {0,4,1,16},
            {1,5,7,0}, {2,0,13,9},
            {15,1,10,0}, {8,0,19,3},
            {0,14,2,10},
        },
        {2,2,2,1},
        154, 77,
        "",
        "Lemma 3, v=22 table",
        "cols 1-3: 22 disjoint volume-2 trades each; col 4: cyclical trade of volume 22",
    },
    {
        "dd-25", "DD", 25, 0, 0, true, 2,
        {
            {0,1,18,3}, {16,0,8,23},
            {0,11,1,7}, {14,9,3,0},
            {13,6,1,0}, {16,21,0,4},
            {2,0,16,12}, {19,0,22,24},
        },
        {2,2,2,2},
        200, 100,
        "",
        "Lemma 3, v=25 table",
        "cols 1-4: 25 disjoint volume-2 trades each",
    },
    {
        "dd-28", "DD", 28, 0, 0, true, 2,
        {
            {4,0,2,1}, {15,0,1,5},
            {1,20,0,26}, {19,0,6,13},
            {0,3,20,7}, {17,0,10,5},
            {0,23,3,14}, {19,11,7,0},
            {0,18,2,12},
        },
        {2,2,2,2,1},
        252, 126,
        "",
        "Lemma 3, v=28 table",
        "cols 1-4: 28 disjoint volume-2 trades each; col 5: cyclical trade of volume 28",
    },
    {
        "dd-31", "DD", 31, 0, 0, true, 2,
        {
            {0,3,8,1}, {3,0,18,13},
            {11,5,0,1}, {3,0,11,17},
            {7,1,19,0}, {0,2,15,6},
            {0,2,23,9}, {26,2,0,11},
            {15,0,4,3}, {0,27,19,10},
        },
        {2,2,2,2,2},
        310, 155,
        "",
        "Lemma 3, v=31 table",
        "cols 1-5: 31 disjoint volume-2 trades each",
    },
    {
        "dd-34", "DD", 34, 0, 0, true, 2,
        {
            {25,0,4,11}, {2,12,9,0}, {20,0,2,5}, {14,0,1,24}, {5,1,0,17},
            {2,6,0,21}, {7,3,29,0}, {21,0,11,29}, {28,20,11,0},
            {0,1,9,3}, {1,7,19,0},
        },
        {5,4,2},
        374, 204,
        "",
        "Lemma 3, v=34 table",
        "col 1: 34 cyclical trades of volume 5; cols 2-3: 102 disjoint volume-2 trades",
    },
    {
        "dd-40", "DD", 40, 0, 0, true, 2,
        {
            {4,1,0,2}, {0,3,18,23}, {0,12,3,33}, {23,0,10,2},
            {0,4,11,32}, {5,0,33,17}, {17,4,0,30}, {18,0,4,29},
            {0,16,7,29}, {32,1,0,38}, {0,6,1,15}, {22,30,6,0},
            {26,20,0,5},
        },
        {4,4,4,1},
        520, 260,
        "",
        "Lemma 3, v=40 table",
        "cols 1-3: 240 disjoint volume-2 trades; col 4: a cyclical trade",
    },
    {
        "dd-43", "DD", 43, 0, 0, true, 2,
        {
            {0,1,8,3}, {0,5,20,27}, {0,4,2,23}, {10,24,3,0},
            {0,1,4,10}, {11,22,3,0}, {2,17,0,8}, {5,0,33,18},
            {1,19,0,12}, {0,10,35,26}, {4,20,0,9}, {12,6,26,0},
            {12,0,42,29}, {4,16,0,29},
        },
        {4,4,4,2},
        602, 301,
        "",
        "Lemma 3, v=43 table",
        "301 disjoint volume-2 trades",
    },
    {
        "dd-58", "DD", 58, 0, 0, true, 2,
        {
            {0,1,56,3}, {0,1,14,9}, {0,4,37,19}, {30,13,4,0}, {22,38,0,8}, {0,56,40,19},
            {1,31,0,27}, {1,32,0,52}, {13,22,6,0}, {20,34,0,6}, {0,25,6,35},
            {0,35,2,24}, {5,0,23,15}, {0,17,34,5}, {27,17,0,7},
            {0,12,3,16}, {40,15,3,0}, {15,26,0,7}, {24,36,0,47},
        },
        {6,5,4,4},
        1102, 551,
        "",
        "Lemma 3, v=58 table",
        "522 disjoint volume-2 trades and a cyclical trade of volume 58",
    },
    {
        "dd-67", "DD", 67, 0, 0, true, 2,
        {
            {1,10,0,16}, {33,24,0,8}, {5,13,0,50}, {5,8,0,2}, {1,0,30,12}, {11,0,1,46},
            {7,0,33,30}, {0,10,17,28}, {0,14,6,47}, {44,29,14,0}, {20,0,9,40}, {0,20,41,1},
            {42,0,3,7}, {6,2,0,19}, {23,7,0,49}, {0,38,54,5}, {21,0,4,36}, {27,32,4,0},
            {14,38,0,2}, {45,2,0,21}, {9,19,31,0}, {12,0,25,39},
        },
        {6,6,6,4},
        1474, 737,
        "",
        "Lemma 3, v=67 table",
        "737 disjoint volume-2 trades",
    },
    {
        "dd-79", "DD", 79, 0, 0, true, 2,
        {
            {17,0,37,1}, {13,30,0,4}, {3,0,30,45}, {43,0,3,31}, {0,18,27,6}, {20,2,0,34},
            {0,1,22,15}, {1,0,30,12}, {39,0,4,29}, {4,0,51,37}, {3,26,44,0}, {9,25,2,0},
            {0,31,2,23}, {51,30,0,10}, {19,27,4,0}, {27,0,13,5}, {0,50,7,26}, {0,43,24,11},
            {1,33,0,9}, {5,0,12,45}, {15,0,5,39}, {11,6,28,0},
            {35,0,19,2}, {0,25,3,38}, {37,0,6,26}, {6,0,54,16},
        },
        {6,6,6,4,4},
        2054, 1027,
        "",
        "Lemma 3, v=79 table",
        "1027 disjoint volume-2 trades",
    },
    {
        "dd-94", "DD", 94, 0, 0, true, 2,
        {
            {1,23,0,40}, {0,5,28,42}, {47,19,0,3}, {18,46,0,4}, {29,0,5,59}, {36,5,0,51}, {30,0,49,2},
            {2,0,20,43}, {13,87,6,0}, {0,13,32,57}, {0,69,91,52}, {61,0,10,1}, {2,70,37,0},
            {20,9,0,82}, {0,12,26,71}, {26,34,0,7}, {16,1,0,34}, {59,0,11,1}, {12,4,84,0},
            {0,79,88,49}, {0,15,4,45}, {17,44,4,0}, {3,56,29,0}, {73,0,16,6}, {0,58,24,3},
            {8,0,61,29}, {0,32,8,44}, {5,43,0,25}, {0,56,2,31}, {0,6,17,48}, {38,7,0,16},
        },
        {7,6,6,6,6},
        2914, 1457,
        "",
        "Lemma 3, v=94 table",
        "1410 disjoint volume-2 trades and a cyclical trade of volume 94",
    },
    {
        "dd-103", "DD", 103, 0, 0, true, 2,
        {
            {0,1,15,31}, {0,89,97,73}, {45,22,0,4}, {0,6,29,38}, {69,0,5,26}, {40,0,82,9}, {64,4,29,0}, {0,66,41,86},
            {21,1,0,50}, {6,50,0,17}, {19,4,0,47}, {0,4,31,65}, {19,12,59,31}, {45,0,7,20}, {12,48,61,0}, {22,13,0,6},
            {51,0,2,25}, {5,0,51,15}, {0,3,51,24}, {49,1,0,46}, {11,37,23,0}, {8,0,18,32},
            {34,53,2,0}, {2,65,19,0}, {29,0,5,62}, {5,0,53,40}, {0,1,93,8}, {92,0,77,59},
            {12,39,0,3}, {20,42,3,0}, {0,2,37,73}, {70,43,8,0}, {0,16,72,44}, {10,47,0,69},
        },
        {8,8,6,6,6},
        3502, 1751,
        "",
        "Lemma 3, v=103 table",
        "1751 disjoint volume-2 trades",
    },
    {
        "dgdd-3pow6", "DGDD", 18, 3, 6, true, 2,
        {
            {2,0,5,9}, {7,10,0,2}, {1,5,0,10},
            {0,1,2,16}, {11,4,1,0},
        },
        {3,2},
        90, 54,
        "group i = {i, i+6, ..., i+12} for 0 <= i < 6",
        "Lemma 4, type 3^6 table",
        "col 1: 18 cyclical trades of volume 3; col 2: 18 disjoint volume-2 trades",
    },
    {
        "dgdd-3pow7", "DGDD", 21, 3, 7, true, 2,
        {
            {0,5,1,13}, {11,10,1,5},
            {0,11,17,19}, {12,11,0,19},
            {0,1,4,6}, {7,12,4,1},
        },
        {2,2,2},
        126, 63,
        "group i = {i, i+7, ..., i+14} for 0 <= i < 7",
        "Lemma 4, type 3^7 table",
        "cols 1-3: 21 disjoint volume-2 trades each",
    },
    {
        "dgdd-3pow8", "DGDD", 24, 3, 8, true, 2,
        {
            {0,1,13,6}, {2,1,0,4}, {1,2,11,22},
            {0,4,10,15}, {21,0,4,18},
            {12,7,0,2}, {2,0,9,15},
        },
        {3,2,2},
        168, 96,
        "group i = {i, i+8, ..., i+16} for 0 <= i < 8",
        "Lemma 4, type 3^8 table",
        "col 1: 24 cyclical trades of volume 3; cols 2-3: 24 disjoint volume-2 trades each",
    },
    {
        "dgdd-3pow9", "DGDD", 27, 3, 9, true, 2,
        {
            {0,6,1,13}, {3,13,1,23}, {17,1,6,4},
            {1,0,2,5}, {3,11,0,24}, {1,8,0,20},
            {0,6,2,17}, {0,14,8,4},
        },
        {3,3,2},
        216, 135,
        "group i = {i, i+9, ..., i+18} for 0 <= i < 9",
        "Lemma 4, type 3^9 table",
        "cols 1-2: 27 cyclical trades of volume 3 each; col 3: 27 disjoint volume-2 trades",
    },
    {
        "dgdd-3pow13", "DGDD", 39, 3, 13, true, 2,
        {
            {3,0,12,21}, {19,0,3,35}, {5,12,0,20},
            {2,1,0,4}, {4,0,32,18}, {14,0,33,24},
            {8,0,2,19}, {2,0,29,14},
            {0,16,22,5}, {0,17,1,8},
            {5,0,11,1}, {0,5,15,36},
        },
        {3,3,2,2,2},
        468, 273,
        "group i = {i, i+13, ..., i+26} for 0 <= i < 13",
        "Lemma 4, type 3^13 table",
        "cols 1-2: 39 cyclical trades of volume 3 each; cols 3-5: 39 disjoint volume-2 trades each",
    },
    {
        "dgdd-4pow4", "DGDD", 16, 4, 4, true, 2,
        {
            {0,1,3,10}, {2,0,3,13},
            {0,5,2,11}, {0,15,14,5},
        },
        {2,2},
        64, 32,
        "group i = {i, i+4, ..., i+12} for 0 <= i < 4",
        "Lemma 5, type 4^4 table",
        "cols 1-2: 16 disjoint volume-2 trades each",
    },
    {
        "dgdd-5pow4", "DGDD", 20, 5, 4, true, 2,
        {
            {1,0,10,3}, {0,1,18,11}, {1,6,0,7},
            {0,7,2,5}, {3,0,14,9},
        },
        {3,2},
        100, 60,
        "group i = {i, i+4, ..., i+16} for 0 <= i < 4",
        "Lemma 5, type 5^4 table",
        "col 1: 20 cyclical trades of volume 3; col 2: 20 disjoint volume-2 trades",
    },
    {
        "dgdd-6pow4", "DGDD", 24, 6, 4, true, 2,
        {
            {0,1,2,7}, {1,0,14,11}, {14,0,23,17},
            {2,0,5,19}, {0,2,15,21}, {0,15,22,9},
        },
        {3,3},
        144, 96,
        "group i = {i, i+4, ..., i+20} for 0 <= i < 4",
        "Lemma 5, type 6^4 table",
        "cols 1-2: 24 cyclical trades of volume 3 each",
    },
    {
        "dgdd-13pow4", "DGDD", 52, 13, 4, true, 2,
        {
            {0,10,15,1}, {0,29,19,2}, {0,29,43,18},
            {1,7,0,2}, {0,13,7,30}, {5,15,22,0},
            {3,0,25,6}, {7,10,0,21},
            {0,5,39,26},
            {1,0,18,27},
        },
        {3,3,2,1,1},
        520, 312,
        "group i = {i, i+4, ..., i+48} for 0 <= i < 4",
        "Lemma 5, type 13^4 table",
        "cols 1-2: 52 cyclical trades of volume 3 each; col 3: 52 disjoint volume-2 trades; cols 4-5: cyclical trades of volume 52",
    },
    {
        "dgdd-19pow4", "DGDD", 76, 19, 4, true, 2,
        {
            {30,0,3,9}, {0,2,13,43}, {2,0,33,7}, {1,19,0,6},
            {22,0,35,1}, {5,15,0,22}, {0,11,1,26}, {3,33,0,62},
            {22,11,0,29}, {0,11,1,26}, {7,17,54,0}, {2,23,0,37},
            {0,47,33,70}, {9,26,55,0}, {5,0,14,39}, {13,0,31,58},
            {6,25,0,51}, {0,57,15,34}, {10,1,0,3}, {18,3,0,41},
        },
        {4,4,4,4,4},
        1520, 912,
        "group i = {i, i+4, ..., i+72} for 0 <= i < 4",
        "Lemma 5, type 19^4 table",
        "cols 1-4: 76 cyclical trades of volume 3 and one cyclical trade of volume 76 each; col 5: 152 disjoint volume-2 trades",
    },
    {
        "dgdd-22pow4", "DGDD", 88, 22, 4, true, 2,
        {
            {0,6,19,1}, {6,0,15,33}, {15,0,62,37}, {0,57,74,79}, {17,0,35,58},
            {2,27,5,0}, {39,0,5,26}, {25,0,14,3}, {42,0,11,53}, {21,10,0,55},
            {2,39,0,25}, {3,18,37,0}, {9,19,0,54}, {38,1,0,67}, {0,29,38,59},
            {35,0,2,29}, {12,27,0,10}, {10,0,3,41}, {1,0,43,2},
            {0,30,7,69}, {0,13,39,46}, {7,0,65,50},
        },
        {5,5,5,4,3},
        1936, 1188,
        "group i = {i, i+4, ..., i+84} for 0 <= i < 4",
        "Lemma 5, type 22^4 table",
        "cols 1-3: 88 cyclical trades of volume 3 and 88 disjoint volume-2 trades each; col 4: 88 cyclical trades of volume 3 and a cyclical trade of volume 88; col 5: 88 cyclical trades of volume 3",
    },
    {
        "dgdd-9pow4", "DGDD", 36, 9, 4, true, 2,
        {
            {1,0,2,7}, {3,14,0,17},
            {0,1,10,19}, {1,0,23,14},
            {3,0,21,10}, {9,0,15,2},
            {2,0,5,31}, {10,0,31,25},
        },
        {2,2,2,2},
        288, 144,
        "group i = {i, i+4, ..., i+32} for 0 <= i < 4",
        "Lemma 6, type 9^4 table",
        "cols 1-4: 36 disjoint volume-2 trades each",
    },
    {
        "dgdd-9pow5", "DGDD", 45, 9, 5, true, 2,
        {
            {0,1,2,4}, {1,0,8,14}, {16,0,43,34},
            {2,0,11,19}, {4,0,37,13}, {0,4,41,28},
            {6,13,27,0}, {1,7,0,24},
            {11,0,42,33}, {0,16,27,39},
            {0,26,3,19}, {17,3,0,29},
        },
        {3,3,2,2,2},
        540, 315,
        "group i = {i, i+5, ..., i+40} for 0 <= i < 5",
        "Lemma 6, type 9^5 table",
        "cols 1-2: 45 cyclical trades of volume 3 each; cols 3-5: 45 disjoint volume-2 trades each",
    },
    {
        "dgdd-6pow5", "DGDD", 30, 6, 5, true, 2,
        {
            {7,9,0,1}, {3,0,7,16}, {2,0,18,21},
            {19,1,12,0}, {6,13,0,19},
            {1,2,4,0}, {4,8,16,0},
            {3,9,0,17},
        },
        {3,2,2,1},
        240, 135,
        "group i = {i, i+5, ..., i+25} for 0 <= i < 5",
        "Lemma 8, type 6^5 table",
        "col 1: 30 cyclical trades of volume 3; cols 2-3: 30 disjoint volume-2 trades each; col 4: a cyclical trade of volume 30",
    },
    {
        "gdd-2pow7", "GDD-master", 14, 2, 7, false, 1,
        {
            {0,1,4,6},
        },
        {1},
        14, -1,
        "group i = {i, i+7} for 0 <= i < 7",
        "Lemma 14, type 2^7 4-GDD master",
        "",
    },
    };
    return entries;
}

}  // namespace ssdd
