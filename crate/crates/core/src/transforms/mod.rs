//! Reference implementations of the sixteen benchmark transforms.

mod arithmetic;
mod boolean;
mod liveness;
mod loops;
mod torch;
pub(crate) mod util;

use std::fmt;
use std::str::FromStr;

use ctt_pyast::{parse, render, ParseError, PyModuleAst};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TaskId {
    AddSubZero,
    ConstantFolding,
    DivMulOne,
    CollapseNestedIfs,
    DeMorgan,
    ReorderConditional,
    DeadCodeElim,
    RedundantFnElim,
    UnusedVarElim,
    ListComprehension,
    ListCompWithCondition,
    LoopDupe,
    LoopUnroll,
    DotProductToTorch,
    PointwiseAddToTorch,
    TorchZeroGrad,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TaskClass {
    Arithmetic,
    Boolean,
    Liveness,
    Loops,
    Optimization,
}

impl TaskClass {
    pub const ALL: [TaskClass; 5] = [
        TaskClass::Arithmetic,
        TaskClass::Boolean,
        TaskClass::Liveness,
        TaskClass::Loops,
        TaskClass::Optimization,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TaskClass::Arithmetic => "Arithmetic",
            TaskClass::Boolean => "Boolean",
            TaskClass::Liveness => "Liveness",
            TaskClass::Loops => "Loops",
            TaskClass::Optimization => "Optimization",
        }
    }
}

impl fmt::Display for TaskClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Static facts about one benchmark transform.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TaskSpec {
    pub id: TaskId,
    pub class: TaskClass,
    pub title: &'static str,
    pub description: &'static str,
    pub semantics_preserving: bool,
}

#[derive(Debug, thiserror::Error)]
#[error("unknown task '{0}'")]
pub struct UnknownTask(pub String);

impl TaskId {
    pub const ALL: [TaskId; 16] = [
        TaskId::AddSubZero,
        TaskId::ConstantFolding,
        TaskId::DivMulOne,
        TaskId::CollapseNestedIfs,
        TaskId::DeMorgan,
        TaskId::ReorderConditional,
        TaskId::DeadCodeElim,
        TaskId::RedundantFnElim,
        TaskId::UnusedVarElim,
        TaskId::ListComprehension,
        TaskId::ListCompWithCondition,
        TaskId::LoopDupe,
        TaskId::LoopUnroll,
        TaskId::DotProductToTorch,
        TaskId::PointwiseAddToTorch,
        TaskId::TorchZeroGrad,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TaskId::AddSubZero => "add_sub_zero",
            TaskId::ConstantFolding => "constant_folding",
            TaskId::DivMulOne => "div_mul_one",
            TaskId::CollapseNestedIfs => "collapse_nested_ifs",
            TaskId::DeMorgan => "de_morgan",
            TaskId::ReorderConditional => "reorder_conditional",
            TaskId::DeadCodeElim => "dead_code_elim",
            TaskId::RedundantFnElim => "redundant_fn_elim",
            TaskId::UnusedVarElim => "unused_var_elim",
            TaskId::ListComprehension => "list_comprehension",
            TaskId::ListCompWithCondition => "list_comp_with_condition",
            TaskId::LoopDupe => "loop_dupe",
            TaskId::LoopUnroll => "loop_unroll",
            TaskId::DotProductToTorch => "dot_product_to_torch",
            TaskId::PointwiseAddToTorch => "pointwise_add_to_torch",
            TaskId::TorchZeroGrad => "torch_zero_grad",
        }
    }

    pub fn spec(self) -> TaskSpec {
        use TaskClass::*;
        let (class, title, description) = match self {
            TaskId::AddSubZero => (
                Arithmetic,
                "Add / subtract zero",
                "Simplify x + 0 → x and x − 0 → x.",
            ),
            TaskId::ConstantFolding => (
                Arithmetic,
                "Constant folding",
                "Evaluate integer literal expressions in-place, e.g. x = 10 + 15 → x = 25.",
            ),
            TaskId::DivMulOne => (
                Arithmetic,
                "Divide / multiply by one",
                "Simplify x ÷ 1 → x and x × 1 → x.",
            ),
            TaskId::CollapseNestedIfs => (
                Boolean,
                "Collapse nested ifs",
                "Recursively flatten nested if conditionals to a compound conditional.",
            ),
            TaskId::DeMorgan => (Boolean, "De Morgan's law", "Rewrite !(a & b) → !a | !b."),
            TaskId::ReorderConditional => (
                Boolean,
                "Reorder conditional",
                "Flip the branches in if not/else conditionals to if/else.",
            ),
            TaskId::DeadCodeElim => (
                Liveness,
                "Dead code elimination",
                "Remove if conditionals if the branch condition statically evaluates to False.",
            ),
            TaskId::RedundantFnElim => (
                Liveness,
                "Redundant fn. elimination",
                "Remove function definitions, and their calls, if the function contains no instructions.",
            ),
            TaskId::UnusedVarElim => (
                Liveness,
                "Unused var. elimination",
                "Remove declared but unused variables.",
            ),
            TaskId::ListComprehension => (
                Loops,
                "List comprehension",
                "Rewrite for loop as list comprehension.",
            ),
            TaskId::ListCompWithCondition => (
                Loops,
                "List comp. w. condition",
                "As above but the loop body has a conditional.",
            ),
            TaskId::LoopDupe => (
                Loops,
                "Loop dupe",
                "Duplicate loops (not semantics preserving).",
            ),
            TaskId::LoopUnroll => (
                Loops,
                "Loop unroll",
                "Fully unroll loops with statically known range() iteration bounds.",
            ),
            TaskId::DotProductToTorch => (
                Optimization,
                "Dot product to torch",
                "Replace for loop that computes vector dot product with torch API.",
            ),
            TaskId::PointwiseAddToTorch => (
                Optimization,
                "Pointwise add to torch",
                "Replace for loop that computes pointwise add with torch API.",
            ),
            TaskId::TorchZeroGrad => (
                Optimization,
                "Torch zero grad",
                "Replace m.zero_grad() with a loop over model parameters, assigning to None.",
            ),
        };
        TaskSpec {
            id: self,
            class,
            title,
            description,
            semantics_preserving: self != TaskId::LoopDupe,
        }
    }

    pub fn class(self) -> TaskClass {
        self.spec().class
    }

    /// Tasks whose outputs can be executed without a tensor runtime.
    pub fn executable(self) -> bool {
        self.class() != TaskClass::Optimization
    }
}

impl fmt::Display for TaskId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TaskId {
    type Err = UnknownTask;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TaskId::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| UnknownTask(s.to_string()))
    }
}

/// Applies the reference transform. Inputs with no rewrite opportunity come
/// back structurally unchanged.
pub fn apply_oracle(task: TaskId, tree: &PyModuleAst) -> PyModuleAst {
    let body = tree.body.clone();
    let body = match task {
        TaskId::AddSubZero => arithmetic::add_sub_zero(body),
        TaskId::ConstantFolding => arithmetic::constant_folding(body),
        TaskId::DivMulOne => arithmetic::div_mul_one(body),
        TaskId::CollapseNestedIfs => boolean::collapse_nested_ifs(body),
        TaskId::DeMorgan => boolean::de_morgan(body),
        TaskId::ReorderConditional => boolean::reorder_conditional(body),
        TaskId::DeadCodeElim => liveness::dead_code_elim(body),
        TaskId::RedundantFnElim => liveness::redundant_fn_elim(body),
        TaskId::UnusedVarElim => liveness::unused_var_elim(body),
        TaskId::ListComprehension => loops::list_comprehension(body, false),
        TaskId::ListCompWithCondition => loops::list_comprehension(body, true),
        TaskId::LoopDupe => loops::loop_dupe(body),
        TaskId::LoopUnroll => loops::loop_unroll(body),
        TaskId::DotProductToTorch => torch::dot_product(body),
        TaskId::PointwiseAddToTorch => torch::pointwise_add(body),
        TaskId::TorchZeroGrad => torch::zero_grad(body),
    };
    PyModuleAst {
        body,
        source_hash: String::new(),
    }
}

/// Whether the transform has anything to rewrite in `tree`.
pub fn applies(task: TaskId, tree: &PyModuleAst) -> bool {
    apply_oracle(task, tree) != *tree
}

/// Parses, transforms and renders in one step.
pub fn apply_oracle_source(task: TaskId, source: &str) -> Result<String, ParseError> {
    let tree = parse(source)?;
    Ok(render(&apply_oracle(task, &tree)))
}

/// Source of the Python `xform` implementing the same rewrite as
/// [`apply_oracle`] over the standard `ast` module.
pub fn reference_source(task: TaskId) -> &'static str {
    match task {
        TaskId::AddSubZero => include_str!("../../reference_xforms/add_sub_zero.py"),
        TaskId::ConstantFolding => include_str!("../../reference_xforms/constant_folding.py"),
        TaskId::DivMulOne => include_str!("../../reference_xforms/div_mul_one.py"),
        TaskId::CollapseNestedIfs => include_str!("../../reference_xforms/collapse_nested_ifs.py"),
        TaskId::DeMorgan => include_str!("../../reference_xforms/de_morgan.py"),
        TaskId::ReorderConditional => include_str!("../../reference_xforms/reorder_conditional.py"),
        TaskId::DeadCodeElim => include_str!("../../reference_xforms/dead_code_elim.py"),
        TaskId::RedundantFnElim => include_str!("../../reference_xforms/redundant_fn_elim.py"),
        TaskId::UnusedVarElim => include_str!("../../reference_xforms/unused_var_elim.py"),
        TaskId::ListComprehension => include_str!("../../reference_xforms/list_comprehension.py"),
        TaskId::ListCompWithCondition => {
            include_str!("../../reference_xforms/list_comp_with_condition.py")
        }
        TaskId::LoopDupe => include_str!("../../reference_xforms/loop_dupe.py"),
        TaskId::LoopUnroll => include_str!("../../reference_xforms/loop_unroll.py"),
        TaskId::DotProductToTorch => include_str!("../../reference_xforms/dot_product_to_torch.py"),
        TaskId::PointwiseAddToTorch => {
            include_str!("../../reference_xforms/pointwise_add_to_torch.py")
        }
        TaskId::TorchZeroGrad => include_str!("../../reference_xforms/torch_zero_grad.py"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ctt_pyast::ast_equal;

    fn check(task: TaskId, input: &str, expected: &str) {
        let out = apply_oracle(task, &parse(input).unwrap());
        let want = parse(expected).unwrap();
        let d = ast_equal(&out, &want);
        assert!(
            d.equal,
            "{task}: got\n{}\nwant\n{expected}\n{:?}",
            render(&out),
            d.first_divergence
        );
        let again = apply_oracle(task, &out);
        assert_eq!(again, out, "{task} is not at a fixpoint on\n{}", render(&out));
    }

    #[test]
    fn task_table_is_complete() {
        assert_eq!(TaskId::ALL.len(), 16);
        for class in TaskClass::ALL {
            let n = TaskId::ALL.iter().filter(|t| t.class() == class).count();
            assert_eq!(n, if class == TaskClass::Loops { 4 } else { 3 }, "{class}");
        }
        for t in TaskId::ALL {
            assert_eq!(t.as_str().parse::<TaskId>().unwrap(), t);
            assert_eq!(t.spec().semantics_preserving, t != TaskId::LoopDupe);
        }
        assert!("nope".parse::<TaskId>().is_err());
    }

    #[test]
    fn pass_is_a_fixpoint_of_every_task() {
        for t in TaskId::ALL {
            check(t, "pass", "pass");
            assert!(!applies(t, &parse("pass").unwrap()));
        }
    }

    #[test]
    fn add_sub_zero() {
        check(TaskId::AddSubZero, "y = x + 0", "y = x");
        check(TaskId::AddSubZero, "y = x - 0 + 0", "y = x");
        check(TaskId::AddSubZero, "y = 0 + x", "y = 0 + x");
        check(TaskId::AddSubZero, "y = x + 0.0", "y = x + 0.0");
        assert!(!applies(TaskId::AddSubZero, &parse("y = x + 1").unwrap()));
    }

    #[test]
    fn constant_folding() {
        check(TaskId::ConstantFolding, "x = 10 + 15", "x = 25");
        check(TaskId::ConstantFolding, "x = 2 * (3 + 4) - 20", "x = -6");
        check(TaskId::ConstantFolding, "x = -7 // 2 + 7 % -3", "x = -6");
        check(TaskId::ConstantFolding, "x = 2 ** 10", "x = 1024");
        check(TaskId::ConstantFolding, "x = 7 / 2", "x = 7 / 2");
        check(TaskId::ConstantFolding, "x = 1 // 0", "x = 1 // 0");
        check(TaskId::ConstantFolding, "x = 2 ** -1", "x = 2 ** -1");
        check(TaskId::ConstantFolding, "x = 2 ** 80", "x = 2 ** 80");
        check(TaskId::ConstantFolding, "x = y + 2 * 3", "x = y + 6");
        check(TaskId::ConstantFolding, "x = True + 1", "x = True + 1");
        check(TaskId::ConstantFolding, "x = -(-5)", "x = 5");
    }

    #[test]
    fn div_mul_one() {
        check(TaskId::DivMulOne, "y = x * 1 / 1", "y = x");
        check(TaskId::DivMulOne, "y = 1 * x", "y = 1 * x");
        check(TaskId::DivMulOne, "y = x // 1", "y = x // 1");
    }

    #[test]
    fn collapse_nested_ifs() {
        check(
            TaskId::CollapseNestedIfs,
            "if a:\n    if b:\n        if c:\n            f()\n",
            "if a and b and c:\n    f()\n",
        );
        check(
            TaskId::CollapseNestedIfs,
            "if a:\n    if b:\n        f()\n    g()\n",
            "if a:\n    if b:\n        f()\n    g()\n",
        );
        check(
            TaskId::CollapseNestedIfs,
            "if a or b:\n    if c:\n        f()\n",
            "if (a or b) and c:\n    f()\n",
        );
    }

    #[test]
    fn de_morgan() {
        check(TaskId::DeMorgan, "c = not (a and b)", "c = not a or not b");
        check(
            TaskId::DeMorgan,
            "c = not (a and (b and d) and e)",
            "c = not a or not b or not d or not e",
        );
        check(TaskId::DeMorgan, "c = not (a or b)", "c = not (a or b)");
    }

    #[test]
    fn reorder_conditional() {
        check(
            TaskId::ReorderConditional,
            "if not x:\n    a()\nelse:\n    b()\n",
            "if x:\n    b()\nelse:\n    a()\n",
        );
        check(
            TaskId::ReorderConditional,
            "if not x:\n    a()\n",
            "if not x:\n    a()\n",
        );
    }

    #[test]
    fn dead_code_elim() {
        check(TaskId::DeadCodeElim, "if False:\n    x = 1\ny = 2", "y = 2");
        check(
            TaskId::DeadCodeElim,
            "def f():\n    if 0:\n        return 1\n",
            "def f():\n    pass\n",
        );
        check(
            TaskId::DeadCodeElim,
            "if 1 > 2 and y:\n    a()\nelse:\n    b()\n",
            "b()\n",
        );
        check(TaskId::DeadCodeElim, "if True:\n    a()\n", "if True:\n    a()\n");
        check(TaskId::DeadCodeElim, "if y and False:\n    a()\n", "if y and False:\n    a()\n");
    }

    #[test]
    fn redundant_fn_elim() {
        check(TaskId::RedundantFnElim, "def f():\n    pass\nf()", "");
        check(
            TaskId::RedundantFnElim,
            "def f(x):\n    \"\"\"doc\"\"\"\ndef g():\n    f(1)\ng()\nprint(2)\n",
            "print(2)\n",
        );
        check(
            TaskId::RedundantFnElim,
            "def f():\n    pass\nx = f()\n",
            "def f():\n    pass\nx = f()\n",
        );
        check(
            TaskId::RedundantFnElim,
            "def f():\n    pass\nf(g())\n",
            "def f():\n    pass\nf(g())\n",
        );
    }

    #[test]
    fn unused_var_elim() {
        check(
            TaskId::UnusedVarElim,
            "def f(a):\n    t = a + 1\n    u = t * 2\n    return a\n",
            "def f(a):\n    return a\n",
        );
        check(
            TaskId::UnusedVarElim,
            "def f(a):\n    t = g(a)\n    return a\n",
            "def f(a):\n    t = g(a)\n    return a\n",
        );
        check(
            TaskId::UnusedVarElim,
            "def f(a):\n    n = 0\n    n += 1\n    return a\n",
            "def f(a):\n    n = 0\n    n += 1\n    return a\n",
        );
        check(TaskId::UnusedVarElim, "def f():\n    x = 1\n", "def f():\n    pass\n");
    }

    #[test]
    fn list_comprehension() {
        let src = "def f(xs):\n    out = []\n    for x in xs:\n        out.append(x * 2)\n    return out\n";
        check(
            TaskId::ListComprehension,
            src,
            "def f(xs):\n    out = [x * 2 for x in xs]\n    return out\n",
        );
        check(TaskId::ListCompWithCondition, src, src);
        let cond = "out = []\nfor x in xs:\n    if x > 0:\n        out.append(x)\n";
        check(TaskId::ListComprehension, cond, cond);
        check(TaskId::ListCompWithCondition, cond, "out = [x for x in xs if x > 0]\n");
    }

    #[test]
    fn loop_dupe() {
        check(
            TaskId::LoopDupe,
            "for i in r:\n    f(i)\n",
            "for i in r:\n    f(i)\nfor i in r:\n    f(i)\n",
        );
        let twice = "while a:\n    f()\nwhile a:\n    f()\n";
        check(TaskId::LoopDupe, twice, twice);
        check(
            TaskId::LoopDupe,
            "for i in r:\n    for j in s:\n        f()\n",
            "for i in r:\n    for j in s:\n        f()\nfor i in r:\n    for j in s:\n        f()\n",
        );
    }

    #[test]
    fn loop_unroll() {
        check(TaskId::LoopUnroll, "for i in range(2):\n    f(i)", "f(0)\nf(1)");
        check(
            TaskId::LoopUnroll,
            "for i in range(2):\n    for j in range(i):\n        f(i, j)\n",
            "f(1, 0)\n",
        );
        check(
            TaskId::LoopUnroll,
            "for i in range(3):\n    if i:\n        break\n",
            "for i in range(3):\n    if i:\n        break\n",
        );
        check(TaskId::LoopUnroll, "for i in range(n):\n    f(i)\n", "for i in range(n):\n    f(i)\n");
        check(TaskId::LoopUnroll, "def g():\n    for i in range(0):\n        f(i)\n", "def g():\n    pass\n");
    }

    #[test]
    fn torch_rewrites() {
        check(
            TaskId::DotProductToTorch,
            "def dot(a, b):\n    s = 0\n    for i in range(len(a)):\n        s += a[i] * b[i]\n    return s\n",
            "import torch\ndef dot(a, b):\n    s = torch.dot(a, b)\n    return s\n",
        );
        check(
            TaskId::PointwiseAddToTorch,
            "import torch\nc = [0] * len(a)\nfor i in range(len(a)):\n    c[i] = a[i] + b[i]\n",
            "import torch\nc = torch.add(a, b)\n",
        );
        check(
            TaskId::TorchZeroGrad,
            "model.zero_grad()\n",
            "for p in model.parameters():\n    p.grad = None\n",
        );
    }
}
