#pragma once

// Embedded catalog asset: named algebras with their known Born structures and
// the expected values every table reproduction is diffed against.
//
// Salamon strings follow the library convention (entry k containing "ij"
// means [e_i, e_j] has coefficient +1 on e_k). Matrices are row lists; J has
// the image J e_c in column c. Subspaces list 1-based basis indices.

#include <string_view>

namespace bornforge {

inline constexpr std::string_view catalog_json = R"json({
  "version": "1.0.0",
  "algebras": [
    {"name": "R2", "salamon": "(0,0)", "born": true,
     "structure": {"h": [[1,0],[0,1]], "J": [[0,-1],[1,0]], "g_plus": [1], "g_minus": [2]}},
    {"name": "r2", "salamon": "(0,12)", "born": true,
     "structure": {"h": [[1,0],[0,1]], "J": [[0,-1],[1,0]], "g_plus": [1], "g_minus": [2]}},
    {"name": "R4", "salamon": "(0,0,0,0)", "born": true,
     "structure": {"h": [[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]],
                   "J": [[0,0,-1,0],[0,0,0,-1],[1,0,0,0],[0,1,0,0]], "g_plus": [1,2], "g_minus": [3,4]}},
    {"name": "rh3", "salamon": "(0,0,12,0)", "born": true,
     "structure": {"h": [[0,0,1,0],[0,0,0,1],[1,0,0,0],[0,1,0,0]],
                   "J": [[0,-1,0,0],[1,0,0,0],[0,0,0,-1],[0,0,1,0]], "g_plus": [1,3], "g_minus": [2,4]}},
    {"name": "rr3,0", "salamon": "(0,12,0,0)", "born": true,
     "structure": {"h": [[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]],
                   "J": [[0,-1,0,0],[1,0,0,0],[0,0,0,-1],[0,0,1,0]], "g_plus": [1,3], "g_minus": [2,4]}},
    {"name": "r2r2", "salamon": "(0,12,0,34)", "born": true,
     "structure": {"h": [[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]],
                   "J": [[0,-1,0,0],[1,0,0,0],[0,0,0,-1],[0,0,1,0]], "g_plus": [1,3], "g_minus": [2,4]}},
    {"name": "r2'", "salamon": "(0,0,13-24,14+23)", "born": true,
     "structure": {"h": [[1,0,0,0],[0,-1,0,0],[0,0,1,0],[0,0,0,-1]],
                   "J": [[0,0,-1,0],[0,0,0,-1],[1,0,0,0],[0,1,0,0]], "g_plus": [1,2], "g_minus": [3,4]}},
    {"name": "r4,-1,-1", "salamon": "(-14,24,34,0)", "born": true,
     "structure": {"h": [[0,0,-1,0],[0,0,0,-1],[-1,0,0,0],[0,-1,0,0]],
                   "J": [[0,0,0,1],[0,0,-1,0],[0,1,0,0],[-1,0,0,0]], "g_plus": [1,3], "g_minus": [2,4]}},
    {"name": "d4,1", "salamon": "(-14,0,12-34,0)", "born": true,
     "structure": {"h": [[0,0,-1,0],[0,0,0,1],[-1,0,0,0],[0,1,0,0]],
                   "J": [[0,0,0,-1],[0,0,-1,0],[0,1,0,0],[1,0,0,0]], "g_plus": [1,3], "g_minus": [2,4]}},
    {"name": "d4,2", "salamon": "(-2*14,24,12-34,0)", "born": true,
     "structure": {"h": [["1/2",0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,2]],
                   "J": [[0,0,0,-2],[0,0,-1,0],[0,1,0,0],["1/2",0,0,0]], "g_plus": [1,3], "g_minus": [2,4]}},
    {"name": "d4,1/2", "salamon": "(-1/2*14,-1/2*24,12-34,0)", "born": true,
     "structure": {"h": [[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]],
                   "J": [[0,-1,0,0],[1,0,0,0],[0,0,0,1],[0,0,-1,0]], "g_plus": [1,3], "g_minus": [2,4]}},
    {"name": "R6", "salamon": "(0,0,0,0,0,0)", "born": true,
     "structure": {"h": [[1,0,0,0,0,0],[0,1,0,0,0,0],[0,0,1,0,0,0],[0,0,0,1,0,0],[0,0,0,0,1,0],[0,0,0,0,0,1]],
                   "J": [[0,0,0,-1,0,0],[0,0,0,0,-1,0],[0,0,0,0,0,-1],[1,0,0,0,0,0],[0,1,0,0,0,0],[0,0,1,0,0,0]],
                   "g_plus": [1,2,3], "g_minus": [4,5,6]}},
    {"name": "h2", "salamon": "(0,0,0,0,12,34)", "born": false},
    {"name": "h4", "salamon": "(0,0,0,0,12,14+23)", "born": true,
     "construction": {"family": "r3-heis3", "x": "-1", "y": "0"}},
    {"name": "h5", "salamon": "(0,0,0,0,13+42,14+23)", "born": false},
    {"name": "h6", "salamon": "(0,0,0,0,12,13)", "born": false},
    {"name": "h7", "salamon": "(0,0,0,12,13,23)", "born": true,
     "construction": {"family": "r3-heis3", "x": "1", "y": "0"}},
    {"name": "h8", "salamon": "(0,0,0,0,0,12)", "born": true,
     "construction": {"family": "r3-r3", "instance": 1}},
    {"name": "h9", "salamon": "(0,0,0,0,12,14+25)", "born": true,
     "construction": {"family": "r3-r3", "instance": 2}},
    {"name": "h10", "salamon": "(0,0,0,12,13,14)", "born": true,
     "construction": {"family": "r3-heis3", "x": "0", "y": "0"}},
    {"name": "h11", "salamon": "(0,0,0,12,13,14+23)", "born": true,
     "construction": {"family": "r3-heis3", "x": "2", "y": "0"}},
    {"name": "h12", "salamon": "(0,0,0,12,13,24)", "born": false},
    {"name": "h13", "salamon": "(0,0,0,12,13+14,24)", "born": true,
     "construction": {"family": "r3-heis3", "x": "2", "y": "1"}},
    {"name": "h14", "salamon": "(0,0,0,12,14,13+42)", "born": false},
    {"name": "h15", "salamon": "(0,0,0,12,13+42,14+23)", "born": false}
  ],
  "table2": ["rh3", "rr3,0", "r2r2", "r2'", "r4,-1,-1", "d4,1", "d4,2", "d4,1/2"],
  "table3": [
    {"name": "rh3", "h": "Flat", "g": "Flat"},
    {"name": "rr3,0", "h": "Ricci soliton", "g": "Flat", "lambda": "-1", "D": ["0","0","1","1"]},
    {"name": "r2r2", "h": "Einstein", "g": "Flat"},
    {"name": "r2'", "h": "Einstein", "g": "Flat"},
    {"name": "r4,-1,-1", "h": "Flat", "g": "Flat"},
    {"name": "d4,1", "h": "Non-flat", "g": "Flat"},
    {"name": "d4,2", "h": "Ricci soliton", "g": "Flat", "lambda": "-3", "D": ["0","3","3","0"]},
    {"name": "d4,1/2", "h": "Einstein", "g": "Flat"}
  ],
  "table4": [
    {"name": "h4", "h": "Non-flat", "g": "Flat",
     "samples": [{"family": "r3-heis3", "x": "-1", "y": "0", "h": "Non-flat", "g": "Flat"}]},
    {"name": "h7", "h": "Non-flat", "g": "Flat",
     "samples": [{"family": "r3-heis3", "x": "1", "y": "0", "h": "Non-flat", "g": "Flat"}]},
    {"name": "h8", "h": "Flat", "g": "Flat",
     "samples": [{"family": "r3-r3", "instance": 1, "h": "Flat", "g": "Flat"}]},
    {"name": "h9", "h": "Non-flat", "g": "Flat",
     "samples": [{"family": "r3-r3", "instance": 2, "h": "Non-flat", "g": "Flat"}]},
    {"name": "h10", "h": "Flat", "g": "Flat",
     "samples": [{"family": "r3-heis3", "x": "0", "y": "0", "h": "Flat", "g": "Flat"}]},
    {"name": "h11", "h": "Non-flat (for x ≠ −3)", "g": "Flat",
     "samples": [{"family": "r3-heis3", "x": "2", "y": "0", "h": "Non-flat", "g": "Flat"},
                 {"family": "r3-heis3", "x": "-2", "y": "0", "h": "Non-flat", "g": "Flat"},
                 {"family": "r3-heis3", "x": "3/2", "y": "0", "h": "Non-flat", "g": "Flat"},
                 {"family": "r3-heis3", "x": "-3", "y": "0", "h": "Flat", "g": "Flat"}]},
    {"name": "h13", "h": "Non-flat (for y² + x² + 3x ≠ 0)", "g": "Non-flat (for y(2x+3) ≠ 0)",
     "samples": [{"family": "r3-heis3", "x": "1", "y": "1", "h": "Non-flat", "g": "Non-flat"},
                 {"family": "r3-heis3", "x": "2", "y": "1", "h": "Non-flat", "g": "Non-flat"},
                 {"family": "r3-heis3", "x": "0", "y": "2", "h": "Non-flat", "g": "Non-flat"},
                 {"family": "r3-heis3", "x": "-3/5", "y": "6/5", "h": "Flat", "g": "Non-flat"},
                 {"family": "r3-heis3", "x": "-12/5", "y": "6/5", "h": "Flat", "g": "Non-flat"},
                 {"family": "r3-heis3", "x": "-3/2", "y": "1", "h": "Non-flat", "g": "Flat"},
                 {"family": "r3-heis3", "x": "-3/2", "y": "-2", "h": "Non-flat", "g": "Flat"}]}
  ],
  "table5": [
    {"name": "h8",  "step": 2, "b1": 5, "b2": 11, "b3": 14, "dim_aut": 24, "dim_center": 4, "nu2": 1},
    {"name": "h2",  "step": 2, "b1": 4, "b2": 8,  "b3": 10, "dim_aut": 16, "dim_center": 2, "nu2": 2},
    {"name": "h4",  "step": 2, "b1": 4, "b2": 8,  "b3": 10, "dim_aut": 17, "dim_center": 2, "nu2": 1},
    {"name": "h5",  "step": 2, "b1": 4, "b2": 8,  "b3": 10, "dim_aut": 16, "dim_center": 2, "nu2": 0},
    {"name": "h6",  "step": 2, "b1": 4, "b2": 9,  "b3": 12, "dim_aut": 19, "dim_center": 3, "nu2": 2},
    {"name": "h7",  "step": 2, "b1": 3, "b2": 8,  "b3": 12, "dim_aut": 18, "dim_center": 3, "nu2": 3},
    {"name": "h9",  "step": 3, "b1": 4, "b2": 7,  "b3": 8,  "dim_aut": 15, "dim_center": 2, "nu2": 1},
    {"name": "h10", "step": 3, "b1": 3, "b2": 6,  "b3": 8,  "dim_aut": 15, "dim_center": 2, "nu2": 3},
    {"name": "h11", "step": 3, "b1": 3, "b2": 6,  "b3": 8,  "dim_aut": 14, "dim_center": 2, "nu2": 2},
    {"name": "h12", "step": 3, "b1": 3, "b2": 6,  "b3": 8,  "dim_aut": 13, "dim_center": 2, "nu2": 3},
    {"name": "h13", "step": 3, "b1": 3, "b2": 5,  "b3": 6,  "dim_aut": 12, "dim_center": 2, "nu2": 3},
    {"name": "h14", "step": 3, "b1": 3, "b2": 5,  "b3": 6,  "dim_aut": 13, "dim_center": 2, "nu2": 2},
    {"name": "h15", "step": 3, "b1": 3, "b2": 5,  "b3": 6,  "dim_aut": 12, "dim_center": 2, "nu2": 1}
  ],
  "families": {
    "r3-heis3": [
      {"when": "y = 0, x = -1", "name": "h4"},
      {"when": "y = 0, x = 0", "name": "h10"},
      {"when": "y = 0, x = 1", "name": "h7"},
      {"when": "y = 0, x not in {-1, 0, 1}", "name": "h11"},
      {"when": "y != 0", "name": "h13"}
    ],
    "r3-r3": [
      {"when": "instance 1", "name": "h8"},
      {"when": "instance 2", "name": "h9"}
    ]
  },
  "born_six_dimensional": ["h4", "h7", "h8", "h9", "h10", "h11", "h13"]
})json";

}  // namespace bornforge
