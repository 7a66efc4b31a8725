#include "bicover/fixtures.hpp"

namespace bicover {

// Tables transcribed cell by cell. Rows keep the printed presentation (index order and
// ruling order), so every comparison goes through the symmetry reduction.
const char* const kFixtureJson = R"json(
{
  "fixtures": [
    {
      "id": "table1", "kind": "classification", "base": "P2",
      "rows": [
        {"label": "a", "D": [[3], [3], [1]], "Y": ["rat", "rat", "K3"], "pg": 1, "q": 0, "K2": 1, "mtc": "✓", "itp": "×", "kodaira": "general"},
        {"label": "b", "D": [[3], [3], [3]], "Y": ["K3", "K3", "K3"], "pg": 3, "q": 0, "K2": 9, "mtc": "✓", "itp": "", "kodaira": "general"},
        {"label": "c", "D": [[4], [2], [0]], "Y": ["rat", "rat", "K3"], "pg": 1, "q": 0, "K2": 0, "mtc": "✓", "itp": "✓", "kodaira": "K3"},
        {"label": "d", "D": [[4], [2], [2]], "Y": ["rat", "K3", "K3"], "pg": 2, "q": 0, "K2": 4, "mtc": "✓", "itp": "✓", "kodaira": "general"},
        {"label": "e", "D": [[5], [1], [1]], "Y": ["rat", "K3", "K3"], "pg": 2, "q": 0, "K2": 1, "mtc": "✓", "itp": "✓", "kodaira": "general"}
      ]
    },
    {
      "id": "tableP1xP1-general", "kind": "classification", "base": "P1xP1",
      "rows": [
        {"label": "a", "D": [[4, 1], [0, 3], [2, 1]], "Y": ["rat", "rat", "K3"], "pg": 1, "q": 0, "K2": 4, "mtc": "✓", "itp": "×", "kodaira": "general"},
        {"label": "b", "D": [[4, 0], [0, 4], [2, 2]], "Y": ["rat", "rat", "K3"], "pg": 1, "q": 0, "K2": 8, "mtc": "✓", "itp": "×", "kodaira": "general"},
        {"label": "c", "D": [[3, 1], [1, 3], [1, 1]], "Y": ["rat", "rat", "K3"], "pg": 1, "q": 0, "K2": 2, "mtc": "✓", "itp": "×", "kodaira": "general"},
        {"label": "d", "D": [[3, 1], [1, 3], [1, 3]], "Y": ["rat", "K3", "K3"], "pg": 2, "q": 0, "K2": 6, "mtc": "✓", "itp": "", "kodaira": "general"},
        {"label": "e", "D": [[3, 2], [1, 2], [1, 2]], "Y": ["rat", "K3", "K3"], "pg": 2, "q": 0, "K2": 4, "mtc": "✓", "itp": "", "kodaira": "general"},
        {"label": "f", "D": [[3, 3], [1, 1], [1, 1]], "Y": ["rat", "K3", "K3"], "pg": 2, "q": 0, "K2": 2, "mtc": "✓", "itp": "✓", "kodaira": "general"},
        {"label": "g", "D": [[3, 0], [1, 4], [1, 4]], "Y": ["rat", "K3", "K3"], "pg": 2, "q": 0, "K2": 8, "mtc": "✓", "itp": "", "kodaira": "general"},
        {"label": "h", "D": [[2, 2], [2, 2], [2, 2]], "Y": ["K3", "K3", "K3"], "pg": 3, "q": 0, "K2": 8, "mtc": "✓", "itp": "", "kodaira": "general"}
      ]
    },
    {
      "id": "tableP1xP1-elliptic", "kind": "classification", "base": "P1xP1",
      "rows": [
        {"label": "i", "D": [[4, 2], [0, 2], [4, 0]], "free_min": 4, "Y": ["rat", "rat", "K3"], "pg": 1, "q": 0, "K2": 0, "mtc": "✓", "itp": "", "kodaira": "elliptic"},
        {"label": "j", "D": [[3, 2], [1, 2], [3, 0]], "free_min": 3, "Y": ["rat", "rat", "K3"], "pg": 1, "q": 0, "K2": 0, "mtc": "✓", "itp": "", "kodaira": "elliptic"},
        {"label": "k", "D": [[2, 2], [2, 2], [2, 0]], "free_min": 2, "Y": ["rat", "rat", "K3"], "pg": 1, "q": 0, "K2": 0, "mtc": "✓", "itp": "", "kodaira": "elliptic"},
        {"label": "l", "D": [[4, 0], [0, 4], [4, 0]], "Y": ["K3", "rul", "K3"], "pg": 2, "q": 3, "K2": 0, "mtc": "", "itp": "", "kodaira": "elliptic"},
        {"label": "m", "D": [[3, 0], [1, 4], [3, 0]], "Y": ["K3", "rul", "K3"], "pg": 2, "q": 2, "K2": 0, "mtc": "", "itp": "", "kodaira": "elliptic"},
        {"label": "n", "D": [[4, 0], [0, 4], [2, 0]], "Y": ["rat", "rul", "K3"], "pg": 1, "q": 2, "K2": 0, "mtc": "✓", "itp": "", "kodaira": "elliptic"},
        {"label": "o", "D": [[4, 2], [0, 2], [2, 0]], "Y": ["rat", "rat", "K3"], "pg": 1, "q": 0, "K2": 0, "mtc": "✓", "itp": "", "kodaira": "elliptic"},
        {"label": "p", "D": [[4, 0], [0, 4], [0, 0]], "Y": ["rul", "rul", "K3"], "pg": 1, "q": 2, "K2": 0, "mtc": "✓", "itp": "✓", "kodaira": "abelian"},
        {"label": "q", "D": [[4, 1], [0, 3], [0, 1]], "Y": ["rul", "rat", "K3"], "pg": 1, "q": 1, "K2": 0, "mtc": "✓", "itp": "", "kodaira": "elliptic"},
        {"label": "r", "D": [[4, 2], [0, 2], [0, 0]], "Y": ["rat", "rat", "K3"], "pg": 1, "q": 0, "K2": 0, "mtc": "✓", "itp": "✓", "kodaira": "K3"},
        {"label": "s", "D": [[4, 2], [0, 2], [0, 2]], "Y": ["rul", "K3", "K3"], "pg": 2, "q": 1, "K2": 0, "mtc": "", "itp": "", "kodaira": "elliptic"},
        {"label": "t", "D": [[4, 3], [0, 1], [0, 1]], "Y": ["rul", "K3", "K3"], "pg": 2, "q": 1, "K2": 0, "mtc": "", "itp": "", "kodaira": "elliptic"},
        {"label": "u", "D": [[3, 2], [1, 2], [1, 0]], "Y": ["rat", "rat", "K3"], "pg": 1, "q": 0, "K2": 0, "mtc": "✓", "itp": "", "kodaira": "elliptic"},
        {"label": "v", "D": [[2, 2], [2, 2], [2, 0]], "Y": ["rat", "rat", "K3"], "pg": 1, "q": 0, "K2": 0, "mtc": "✓", "itp": "", "kodaira": "elliptic"},
        {"label": "w", "D": [[2, 2], [2, 2], [0, 0]], "Y": ["rat", "rat", "K3"], "pg": 1, "q": 0, "K2": 0, "mtc": "✓", "itp": "✓", "kodaira": "K3"}
      ]
    },
    {
      "id": "tableF2-irr", "kind": "classification", "base": "F2",
      "rows": [
        {"label": "a", "D": [[3, 6], [1, 2], [1, 2]], "Y": ["rat", "K3", "K3"], "pg": 2, "q": 0, "K2": 2, "mtc": "", "itp": "✓", "kodaira": "general"},
        {"label": "b", "D": [[2, 4], [2, 4], [0, 0]], "Y": ["rat", "rat", "K3"], "pg": 1, "q": 0, "K2": 0, "mtc": "✓", "itp": "✓", "kodaira": "K3"},
        {"label": "c", "D": [[2, 4], [2, 4], [0, 2]], "free_min": 2, "Y": ["rat", "rat", "K3"], "pg": 1, "q": 0, "K2": 0, "mtc": "", "itp": "", "kodaira": "elliptic"},
        {"label": "d", "D": [[2, 4], [2, 4], [2, 2]], "Y": ["rat", "rat", "K3"], "pg": 1, "q": 0, "K2": 0, "mtc": "", "itp": "", "kodaira": "elliptic"},
        {"label": "e", "D": [[2, 4], [2, 4], [2, 4]], "Y": ["K3", "K3", "K3"], "pg": 3, "q": 0, "K2": 8, "mtc": "", "itp": "", "kodaira": "general"}
      ]
    },
    {
      "id": "tableF2-red", "kind": "classification", "base": "F2",
      "rows": [
        {"label": "f", "D": [[4, 6], [0, 2], [0, 0]], "Y": ["rat", "rat", "K3"], "pg": 1, "q": 0, "K2": 0, "mtc": "✓", "itp": "✓", "kodaira": "K3"},
        {"label": "g", "D": [[4, 6], [0, 2], [0, 2]], "Y": ["rul", "K3", "K3"], "pg": 2, "q": 1, "K2": 0, "mtc": "", "itp": "", "kodaira": "elliptic"},
        {"label": "h", "D": [[3, 4], [1, 4], [1, 2]], "Y": ["rat", "rat", "K3"], "pg": 1, "q": 0, "K2": 2, "mtc": "✓", "itp": "", "kodaira": "general"},
        {"label": "i", "D": [[3, 4], [1, 4], [1, 4]], "Y": ["rat", "K3", "K3"], "pg": 2, "q": 0, "K2": 6, "mtc": "✓", "itp": "", "kodaira": "general"},
        {"label": "j", "D": [[2, 2], [2, 6], [0, 0]], "Y": ["rat", "rat", "K3"], "pg": 1, "q": 0, "K2": 0, "mtc": "✓", "itp": "✓", "kodaira": "K3"},
        {"label": "k", "D": [[2, 2], [2, 6], [0, 2]], "free_min": 2, "Y": ["rat", "rat", "K3"], "pg": 1, "q": 0, "K2": 0, "mtc": "", "itp": "", "kodaira": "elliptic"}
      ]
    },
    {
      "id": "tableF3", "kind": "classification", "base": "F3",
      "rows": [
        {"label": "l", "D": [[4, 9], [0, 1], [0, 1]], "Y": ["rat", "K3", "K3"], "pg": 2, "q": 0, "K2": 0, "mtc": "✓", "itp": "", "kodaira": "elliptic"},
        {"label": "m", "D": [[3, 6], [1, 4], [1, 4]], "Y": ["rat", "K3", "K3"], "pg": 2, "q": 0, "K2": 5, "mtc": "✓", "itp": "", "kodaira": "general"},
        {"label": "n", "D": [[2, 3], [2, 7], [0, 1]], "free_min": 1, "Y": ["rat", "rat", "K3"], "pg": 1, "q": 0, "K2": 0, "mtc": "", "itp": "", "kodaira": "elliptic"}
      ]
    },
    {
      "id": "tableF4", "kind": "classification", "base": "F4",
      "rows": [
        {"label": "o", "D": [[3, 8], [1, 4], [1, 4]], "Y": ["rat", "K3", "K3"], "pg": 2, "q": 0, "K2": 4, "mtc": "✓", "itp": "", "kodaira": "general"},
        {"label": "p", "D": [[2, 4], [2, 8], [0, 0]], "Y": ["rat", "rat", "K3"], "pg": 1, "q": 0, "K2": 0, "mtc": "✓", "itp": "✓", "kodaira": "K3"},
        {"label": "q", "D": [[2, 4], [2, 8], [0, 2]], "free_min": 2, "Y": ["rat", "rat", "K3"], "pg": 1, "q": 0, "K2": 0, "mtc": "", "itp": "", "kodaira": "elliptic"}
      ]
    },
    {
      "id": "tableF5", "kind": "classification", "base": "F5",
      "rows": []
    },
    {
      "id": "table2", "kind": "lattice", "base": "P2",
      "rows": [
        {"label": "a", "D": [[3], [3], [1]], "T": [null, null, "U^{⊕2}⊕E_8(-2)"], "r_X": 12, "m": [null, null, 10], "m_X": 12},
        {"label": "b", "D": [[3], [3], [3]], "T": ["U^{⊕2}⊕E_8(-2)", "U^{⊕2}⊕E_8(-2)", "U^{⊕2}⊕E_8(-2)"], "r_X": 36, "m": [10, 10, 10], "m_X": 19},
        {"label": "c", "D": [[4], [2], [0]], "T": [null, null, "U^{⊕2}⊕D_4(-1)⊕⟨-2⟩^5"], "r_X": 13, "m": [null, null, 11], "m_X": 11},
        {"label": "d", "D": [[4], [2], [2]], "T": [null, "U^{⊕2}⊕D_4(-1)⊕⟨-2⟩^5", "U^{⊕2}⊕D_4(-1)⊕⟨-2⟩^5"], "r_X": 26, "m": [null, 11, 11], "m_X": 16},
        {"label": "e", "D": [[5], [1], [1]], "T": [null, "U^{⊕2}⊕E_8⊕⟨−2⟩^4", "U^{⊕2}⊕E_8⊕⟨−2⟩^4"], "r_X": 32, "m": [null, 14, 14], "m_X": 16}
      ]
    },
    {
      "id": "tableP1xP1-tra", "kind": "lattice", "base": "P1xP1",
      "rows": [
        {"label": "a", "D": [[4, 1], [0, 3], [2, 1]], "T": [null, null, "⟨2⟩^{⊕2}⊕⟨-2⟩^{⊕6}"], "m": [null, null, 6], "m_X": 11},
        {"label": "b", "D": [[4, 0], [0, 4], [2, 2]], "T": [null, null, "U(2)^{⊕2}"], "m": [null, null, 2], "m_X": 10},
        {"label": "c", "D": [[3, 1], [1, 3], [1, 1]], "T": [null, null, "⟨2⟩^{⊕2}⊕⟨-2⟩^{⊕8}"], "m": [null, null, 8], "m_X": 11},
        {"label": "d", "D": [[3, 1], [1, 3], [1, 3]], "T": [null, "U(2)^{⊕2}⊕⟨-2⟩^{⊕6}", "U(2)^{⊕2}⊕⟨-2⟩^{⊕6}"], "m": [null, 8, 8], "m_X": 15},
        {"label": "e", "D": [[3, 2], [1, 2], [1, 2]], "T": [null, "U^{⊕2}⊕⟨-2⟩^{⊕8}", "U^{⊕2}⊕⟨-2⟩^{⊕8}"], "m": [null, 10, 10], "m_X": 15},
        {"label": "f", "D": [[3, 3], [1, 1], [1, 1]], "T": [null, "U^{⊕2}⊕D_6⊕⟨-2⟩^{⊕4}", "U^{⊕2}⊕D_6⊕⟨-2⟩^{⊕4}"], "m": [null, 12, 12], "m_X": 15},
        {"label": "g", "D": [[3, 0], [1, 4], [1, 4]], "T": [null, "U(2)^{⊕2}⊕⟨-2⟩^{⊕4}", "U(2)^{⊕2}⊕⟨-2⟩^{⊕4}"], "m": [null, 6, 6], "m_X": 15},
        {"label": "h", "D": [[2, 2], [2, 2], [2, 2]], "T": ["U^{⊕2}⊕E_8(-2)", "U^{⊕2}⊕E_8(-2)", "U^{⊕2}⊕E_8(-2)"], "m": [10, 10, 10], "m_X": 18}
      ]
    },
    {
      "id": "tableP1xP1-kummer", "kind": "lattice", "base": "P1xP1",
      "rows": [
        {"label": "p", "D": [[4, 0], [0, 4], [0, 0]], "T": [null, null, "U(2)⊕U(2)"]},
        {"label": "r", "D": [[4, 2], [0, 2], [0, 0]], "T": [null, null, "U⊕U⊕N"]},
        {"label": "w", "D": [[2, 2], [2, 2], [0, 0]], "T": [null, null, "U⊕U⊕E_8(-2)"]}
      ]
    },
    {
      "id": "hodge-P2", "kind": "hodge", "base": "P2",
      "rows": [
        {"label": "b", "D": [[3], [3], [3]], "h11": 31, "rho": [1, 1, 1], "tra": [1, 10, 1], "for": [1, 2, 3]},
        {"label": "d", "D": [[4], [2], [2]], "h11": 26, "rho": [4, 1, 1], "tra": [1, 11, 1], "for": [2, 3]},
        {"label": "e", "D": [[5], [1], [1]], "h11": 29, "rho": [1, 1, 1], "tra": [1, 14, 1], "for": [2, 3]}
      ]
    },
    {
      "id": "hodge-P1xP1", "kind": "hodge", "base": "P1xP1",
      "rows": [
        {"label": "d", "D": [[3, 1], [1, 3], [1, 3]], "h11": 24, "rho": [8, 2, 2], "tra": [1, 8, 1], "for": [2, 3]},
        {"label": "e", "D": [[3, 2], [1, 2], [1, 2]], "h11": 26, "rho": [6, 2, 2], "tra": [1, 10, 1], "for": [2, 3]},
        {"label": "f", "D": [[3, 3], [1, 1], [1, 1]], "h11": 28, "rho": [4, 2, 2], "tra": [1, 12, 1], "for": [2, 3]},
        {"label": "g", "D": [[3, 0], [1, 4], [1, 4]], "h11": 22, "rho": [10, 2, 2], "tra": [1, 6, 1], "for": [2, 3]},
        {"label": "h", "D": [[2, 2], [2, 2], [2, 2]], "h11": 32, "rho": [2, 2, 2], "tra": [1, 10, 1], "for": [1, 2, 3]}
      ]
    },
    {
      "id": "hodge-Fn", "kind": "hodge",
      "rows": [
        {"label": "i", "base": "F2", "D": [[3, 4], [1, 4], [1, 4]], "h11": 24, "rho": [8, 2, 2], "tra": [1, 8, 1], "for": [2, 3]},
        {"label": "m", "base": "F3", "D": [[3, 6], [1, 4], [1, 4]], "h11": 25, "rho": [7, 2, 2], "tra": [1, 9, 1], "for": [2, 3]},
        {"label": "o", "base": "F4", "D": [[3, 8], [1, 4], [1, 4]], "h11": 26, "rho": [6, 2, 2], "tra": [1, 10, 1], "for": [2, 3]}
      ]
    },
    {
      "id": "table4-iterated", "kind": "iterated", "base": "P2",
      "rows": [
        {"label": "GS2b", "D": [[4], [2], [2]], "construction": 1,
         "solutions": [{"delta1": [2], "pg_W": 3, "r_W": 27, "m": [7, 7, 7], "Z1": "Enriques", "Z3": "K3"}]},
        {"label": "GS2b", "D": [[4], [2], [2]], "construction": 2,
         "solutions": [{"delta1": [1], "pg_W": 5, "r_W": 48, "m": [8, 8, 6], "Z3": "K3"}]},
        {"label": "SHS1", "D": [[5], [1], [1]], "construction": 1,
         "solutions": [{"delta1": [3], "pg_W": 3, "r_W": 29, "m": [8, 8, 7], "Z1": "rational", "Z3": "K3"},
                       {"delta1": [4], "pg_W": 3, "r_W": 36, "m": [10, 10, 10], "Z1": "rational", "Z3": "K3"}]},
        {"label": "SHS1", "D": [[5], [1], [1]], "construction": 2,
         "solutions": [{"delta1": [1], "pg_W": 4, "r_W": 40, "m": [8, 8, null], "Z3": "rational"},
                       {"delta1": [2], "pg_W": 5, "r_W": 56, "m": [10, 10, 6], "Z3": "K3"}]}
      ]
    },
    {
      "id": "iterated-P1xP1", "kind": "iterated", "base": "P1xP1",
      "rows": [
        {"label": "d", "D": [[3, 1], [1, 3], [1, 3]], "construction": 1, "solutions": []},
        {"label": "g", "D": [[3, 0], [1, 4], [1, 4]], "construction": 1, "solutions": []},
        {"label": "e", "D": [[3, 2], [1, 2], [1, 2]], "construction": 1, "solutions": [{"delta1": [2, 0], "Z3": "K3"}]},
        {"label": "f", "D": [[3, 3], [1, 1], [1, 1]], "construction": 1,
         "solutions": [{"delta1": [2, 0]}, {"delta1": [2, 1]}, {"delta1": [2, 2]}]},
        {"label": "d", "D": [[3, 1], [1, 3], [1, 3]], "construction": 2, "solutions": []},
        {"label": "g", "D": [[3, 0], [1, 4], [1, 4]], "construction": 2, "solutions": []},
        {"label": "e", "D": [[3, 2], [1, 2], [1, 2]], "construction": 2, "solutions": [{"delta1": [1, 0], "pg_W": 5, "Z3": "K3"}]},
        {"label": "f", "D": [[3, 3], [1, 1], [1, 1]], "construction": 2,
         "solutions": [{"delta1": [1, 1], "pg_W": 5, "Z3": "K3"}, {"delta1": [1, 0], "pg_W": 4, "Z3": "rational"}]}
      ]
    },
    {
      "id": "iterated-Fn", "kind": "iterated",
      "rows": [
        {"label": "a", "base": "F2", "D": [[3, 6], [1, 2], [1, 2]], "construction": 1,
         "solutions": [{"delta1": [2, 3], "pg_W": 3}, {"delta1": [2, 4], "pg_W": 3}]},
        {"label": "a", "base": "F2", "D": [[3, 6], [1, 2], [1, 2]], "construction": 2,
         "solutions": [{"delta1": [0, 1], "pg_W": 4}, {"delta1": [0, 2], "pg_W": 4}, {"delta1": [1, 2], "pg_W": 5}]},
        {"label": "i", "base": "F2", "D": [[3, 4], [1, 4], [1, 4]], "construction": 1, "solutions": []},
        {"label": "i", "base": "F2", "D": [[3, 4], [1, 4], [1, 4]], "construction": 2, "solutions": []},
        {"label": "m", "base": "F3", "D": [[3, 6], [1, 4], [1, 4]], "construction": 1, "solutions": []},
        {"label": "m", "base": "F3", "D": [[3, 6], [1, 4], [1, 4]], "construction": 2, "solutions": []},
        {"label": "o", "base": "F4", "D": [[3, 8], [1, 4], [1, 4]], "construction": 1,
         "solutions": [{"delta1": [2, 4], "pg_W": 3}]},
        {"label": "o", "base": "F4", "D": [[3, 8], [1, 4], [1, 4]], "construction": 2, "solutions": []}
      ]
    },
    {
      "id": "singular", "kind": "singular",
      "rows": [
        {"label": "cubics k=1", "base": "P2", "D": [[3], [3], [3]], "points": 1, "pg": 3, "K2": 8},
        {"label": "cubics k=2", "base": "P2", "D": [[3], [3], [3]], "points": 2, "pg": 3, "K2": 7},
        {"label": "cubics k=3", "base": "P2", "D": [[3], [3], [3]], "points": 3, "pg": 3, "K2": 6},
        {"label": "cubics k=4", "base": "P2", "D": [[3], [3], [3]], "points": 4, "pg": 3, "K2": 5},
        {"label": "cubics k=5", "base": "P2", "D": [[3], [3], [3]], "points": 5, "pg": 3, "K2": 4},
        {"label": "cubics k=6", "base": "P2", "D": [[3], [3], [3]], "points": 6, "pg": 3, "K2": 3},
        {"label": "cubics k=7", "base": "P2", "D": [[3], [3], [3]], "points": 7, "pg": 3, "K2": 2},
        {"label": "cubics k=8", "base": "P2", "D": [[3], [3], [3]], "points": 8, "error": true},
        {"label": "quadric one point", "base": "P1xP1", "D": [[3, 1], [1, 3], [1, 3]], "points": 1, "pg": 2, "K2": 5}
      ]
    }
  ],
  "errata": [
    {"table": "tableP1xP1-elliptic", "row": "t", "column": "Y1", "listed": "rul", "computed": "rat",
     "reason": "Y1 is branched on D2 + D3, two fibers of one ruling, so Y1 is P1 x P1; chi(Y1) = 1"},
    {"table": "tableP1xP1-elliptic", "row": "t", "column": "q", "listed": "1", "computed": "0",
     "reason": "chi(X) = 3 from the three half classes, and p_g = 2 forces q = 0"},
    {"table": "tableP1xP1-elliptic", "row": "t", "column": "MTC", "listed": "", "computed": "✓",
     "reason": "with Y1 rational, p_g = 2 and rho(Y2) = rho(Y3) = 2, the two-K3 criterion applies"},
    {"table": "tableF2-red", "row": "k", "column": "MTC", "listed": "", "computed": "✓",
     "reason": "p_g = 1 with a K3 quotient; the same cell is checked for the parallel quadric families i, j, k"},
    {"table": "tableF3", "row": "n", "column": "MTC", "listed": "", "computed": "✓",
     "reason": "p_g = 1 with a K3 quotient; the same cell is checked for the parallel quadric families i, j, k"},
    {"table": "tableF4", "row": "q", "column": "MTC", "listed": "", "computed": "✓",
     "reason": "p_g = 1 with a K3 quotient; the same cell is checked for the parallel quadric families i, j, k"},
    {"table": "table4-iterated", "row": "SHS1 C2 A", "column": "r_W", "listed": "40", "computed": "48",
     "reason": "D1 splits as line + quartic; Y2 and Y3 are branched on a quartic and two lines, 10 moduli each"},
    {"table": "table4-iterated", "row": "SHS1 C2 A", "column": "m_Y2", "listed": "8", "computed": "10",
     "reason": "quartic plus two lines: 14 + 2 + 2 - 8 = 10 parameters"},
    {"table": "table4-iterated", "row": "SHS1 C2 A", "column": "m_Y3", "listed": "8", "computed": "10",
     "reason": "quartic plus two lines: 14 + 2 + 2 - 8 = 10 parameters"},
    {"table": "table4-iterated", "row": "SHS1 C2 2A", "column": "r_W", "listed": "56", "computed": "48",
     "reason": "D1 splits as conic + cubic; Y2 and Y3 are branched on a cubic, a conic and a line, 8 moduli each"},
    {"table": "table4-iterated", "row": "SHS1 C2 2A", "column": "m_Y2", "listed": "10", "computed": "8",
     "reason": "cubic, conic and line: 9 + 5 + 2 - 8 = 8 parameters"},
    {"table": "table4-iterated", "row": "SHS1 C2 2A", "column": "m_Y3", "listed": "10", "computed": "8",
     "reason": "cubic, conic and line: 9 + 5 + 2 - 8 = 8 parameters"},
    {"table": "iterated-P1xP1", "row": "d C2", "column": "solutions", "listed": "{}", "computed": "{A2}",
     "reason": "Delta1 = A2 meets every stated condition of the second construction"},
    {"table": "iterated-P1xP1", "row": "e C2", "column": "solutions", "listed": "{A1}", "computed": "{A1, 2A2, A2}",
     "reason": "Delta1 = 2A2 and A2 meet every stated condition of the second construction"},
    {"table": "iterated-P1xP1", "row": "f C2", "column": "solutions", "listed": "{A1 + A2, A1}", "computed": "{3A1, 2A1, A1 + A2, A1}",
     "reason": "Delta1 = 3A1 and 2A1 meet every stated condition of the second construction"},
    {"table": "iterated-Fn", "row": "a C1", "column": "solutions", "listed": "{2Gamma + 4Phi, 2Gamma + 3Phi}", "computed": "{2Gamma + 4Phi, 2Gamma + 3Phi, 2Gamma + 2Phi}",
     "reason": "Delta1 = 2Gamma + 2Phi, Delta2 = 2Phi meets every stated condition of the first construction"}
  ]
}
)json";

}  // namespace bicover
