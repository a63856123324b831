"""The verification harness end to end.

Evaluates the family hypothesis and the structural conclusion on single
instances, then sweeps a small corpus with every check and prints the
deterministic report.
"""

from grouplab import (
    HypothesisMode,
    builtin_corpus,
    main_conclusion,
    main_hypothesis,
    named_group,
    run_corpus,
    verify_main,
)

# Single instances.  For S4 at p = 2 every family of the Sylow 2-subgroup
# contains a member that fails to permute with some Sylow 3-subgroup.
for name, p in (("S4", 2), ("Q8", 2), ("S3xS3", 2), ("S3", 3)):
    ng = named_group(name)
    rec = verify_main(ng.group, p, HypothesisMode.EXISTS, group_name=name)
    print(
        f"{name} at p={p}: hypothesis={rec.hypothesis} "
        f"conclusion={rec.conclusion} violated={rec.violated}"
    )

# The three quantifier modes: all families / the canonical family / some family.
ng = named_group("S4")
for mode in HypothesisMode:
    value, _ = main_hypothesis(ng.group, 2, mode)
    print(f"S4 hypothesis under {mode.value}: {value}")
print("S4 conclusion:", main_conclusion(ng.group, 2)[0])

# A corpus sweep.  Violations would abort with a serialized witness; the
# statements being verified are theorems, so a clean report is expected.
report = run_corpus(
    builtin_corpus(30),
    checks=["main", "srinivasan", "corollaries"],
    mode=HypothesisMode.EXISTS,
)
print()
print(report.render("text"))
