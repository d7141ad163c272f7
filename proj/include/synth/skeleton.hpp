#pragma once

#include <string>
#include <vector>

#include "synth/fragments.hpp"

namespace synth {

// An instruction/bare-value operand. Only float-valued things can be
// operands; loop inductions are integers and appear solely in affine index
// expressions.
struct Operand {
    enum class Kind { Const0, Const1, Scalar, Load, Acc, Reg };

    Kind kind = Kind::Const0;
    int index = 0;  // Scalar: param position; Load: load slot; Acc: loop index; Reg: hole-local

    friend bool operator==(const Operand& a, const Operand& b) {
        return a.kind == b.kind && a.index == b.index;
    }
    friend bool operator<(const Operand& a, const Operand& b) {
        if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
        return a.index < b.index;
    }
};

struct LoopSite {
    int frag_id = -1;
    int parent = -1;          // enclosing loop index, -1 at root
    int bound_param = -1;     // param position of the int bound
    bool is_zip = false;
    int array_x = -1;         // param positions of the iterated arrays
    int array_y = -1;         // zip only
    int load_x = -1;          // load slots
    int load_y = -1;
    int init_hole = -1;
    int body_hole = -1;
    int code_begin = -1;      // LoopBegin / LoopEnd statement indices
    int code_end = -1;
};

struct LoadSite {
    int loop = -1;            // loop whose induction indexes the array (direct loads)
    int array_param = -1;
    int affine_site = -1;     // -1 for plain loads
};

// One candidate index expression for an affine load.
struct IndexExpr {
    bool product = false;
    int loop_a = -1;  // single: induction of loop_a
    int loop_b = -1;  // product: ind[loop_a] * bound[loop_b] + ind[loop_b]
};

struct AffineSite {
    int load_slot = -1;
    int array_param = -1;
    std::vector<IndexExpr> candidates;
};

struct StoreSite {
    int loop = -1;            // parent loop; its induction is the store index
    int array_param = -1;
    int hole = -1;
};

// A program location to fill. AccInit and ReturnExpr accept a bare in-scope
// value or an instruction sequence; AccInit may also stay empty (the
// accumulator starts undefined). LoopBody accepts a possibly-empty sequence
// (empty means the accumulator is never updated). StoreExpr needs at least
// one instruction.
struct Hole {
    enum class Kind { AccInit, LoopBody, StoreExpr, ReturnExpr };

    Kind kind = Kind::LoopBody;
    int loop = -1;              // owning loop (AccInit/LoopBody), parent loop (StoreExpr)
    int store = -1;             // StoreExpr only
    std::vector<Operand> env;   // in-scope values, canonical order (consts first)
};

// One statement of the lowered shell. Loops are delimited by LoopBegin and
// LoopEnd; everything else is straight-line.
struct Stmt {
    enum class Op { AccInit, LoopBegin, Load, AffineLoad, BodyHole, Store, LoopEnd, Return };
    Op op = Op::AccInit;
    int index = 0;  // loop index / load slot / store index; Return unused
};

struct Skeleton {
    std::string function_name;
    std::vector<LoopSite> loops;
    std::vector<LoadSite> loads;
    std::vector<AffineSite> affine_sites;
    std::vector<StoreSite> stores;
    std::vector<Hole> holes;
    int return_hole = -1;  // -1 for void signatures
    std::vector<Stmt> code;
    std::string comp_desc;  // human-readable composition, for reports
};

// Lowers a valid composition to its skeleton. Deterministic: identical
// composition and spec produce a structurally identical skeleton.
//
// Each loop contributes a `for` header over its bound, a load of its
// array at the induction variable (two for zip loops), and a fresh
// accumulator: initialized by the AccInit hole before the loop, updated to
// the body hole's last register at the end of each iteration, and visible
// after the loop. Children lower in order inside the loop body, before the
// body hole. A store writes its parent loop's element from its hole's last
// register. An affine access loads its array at an index chosen from the
// candidate set over its loop ancestors i1..id (outermost first): each ik
// alone, plus both products ind_a*bound_b+ind_b when d == 2.
Skeleton lower(const Composition& comp, const std::vector<FragmentInstance>& frags,
               const FunctionSpec& spec);

}  // namespace synth
