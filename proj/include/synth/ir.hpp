#pragma once

#include <optional>
#include <string>
#include <vector>

#include "synth/skeleton.hpp"
#include "synth/testcase.hpp"

namespace synth {

enum class FOp { Add, Sub, Mul };

const char* fop_symbol(FOp op);

// One instruction. The destination register is implicit: the instruction's
// position in its hole's sequence (single assignment by construction).
// Registers are hole-local; values cross holes only through accumulators,
// loads, and stores.
struct Instr {
    FOp op = FOp::Add;
    Operand lhs, rhs;

    friend bool operator==(const Instr& a, const Instr& b) {
        return a.op == b.op && a.lhs == b.lhs && a.rhs == b.rhs;
    }
};

struct HoleFill {
    enum class Mode { Empty, Bare, Seq };

    Mode mode = Mode::Empty;
    Operand bare;               // Bare only
    std::vector<Instr> instrs;  // Seq only

    friend bool operator==(const HoleFill& a, const HoleFill& b) {
        if (a.mode != b.mode) return false;
        if (a.mode == Mode::Bare) return a.bare == b.bare;
        if (a.mode == Mode::Seq) return a.instrs == b.instrs;
        return true;
    }
};

// A complete candidate: one fill per skeleton hole plus one index choice
// per affine site.
struct Program {
    const Skeleton* sk = nullptr;
    std::vector<HoleFill> fills;
    std::vector<int> affine_choice;
};

struct RunResult {
    enum class Status { Ok, TrapOutOfBounds, TrapUndefined };

    Status status = Status::Ok;
    std::optional<double> ret;                  // non-void signatures, Ok only
    std::vector<std::vector<double>> buffers;   // final contents per param position

    bool ok() const { return status == Status::Ok; }
};

// Structural validity: fill modes legal for their hole kinds, operands in
// scope and register references strictly backward, store fills nonempty,
// affine choices in range. The enumerators only produce well-formed
// programs; tests use this to validate hand-built ones.
bool program_well_formed(const Program& p, std::string* why = nullptr);

// Executes with 64-bit float semantics, left-to-right operand evaluation,
// loop bounds read once at entry. Any out-of-range buffer index traps; so
// does reading an accumulator whose init hole is empty. Buffers are written
// only by store statements.
RunResult interpret(const Program& p, const FunctionSpec& spec, const TestCase& inputs);

// Deterministic C-like rendering of a complete candidate.
std::string emit_c(const Program& p, const FunctionSpec& spec);

// Canonical JSON dump (stable field order) of the program structure.
std::string program_to_json(const Program& p, const FunctionSpec& spec);

}  // namespace synth
