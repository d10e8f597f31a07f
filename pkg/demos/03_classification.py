"""Classifying the spaces (X_n, tau(A)) with citation-traced verdicts.

Run: python demos/03_classification.py
"""

from niemytzki import classify, explain

HEADLINE = (
    "metrizable", "locally_compact", "perfect", "lindelof", "normal",
    "sigma_compact",
)

print("The poset runs from tau(all) = Euclidean down to tau(empty) = the")
print("tangent-ball topology; properties degrade along the way:\n")

rows = ["all", "!rationals", "bernstein", "cantor", "rationals", "empty"]
width = max(len(r) for r in rows) + 2
print(" " * width + "  ".join(f"{name[:10]:>10}" for name in HEADLINE))
for text in rows:
    report = classify(text, 2)
    cells = [f"{report.properties[name].value:>10}" for name in HEADLINE]
    print(f"{text:<{width}}" + "  ".join(cells))

print("\nEvery verdict is auditable. Why is the Bernstein modification")
print("Lindelöf?\n")
for step in explain(classify("bernstein", 2), "lindelof"):
    print(f'  [{step.rule}] "{step.citation}" -> {step.verdict}')

print("\n...and why is it not perfect?\n")
for step in explain(classify("bernstein", 2), "perfect"):
    print(f'  [{step.rule}] "{step.citation}" -> {step.verdict}')

print("\nThe Lindelöf pivot is whether the complement of A contains a closed")
print("uncountable subset: a Cantor set left outside A is enough to destroy")
print("normality, however small it is:\n")
for text in ["!cantor", "all"]:
    report = classify(text, 2)
    print(
        f"  A = {text}: lindelof = {report.properties['lindelof'].value}, "
        f"normal = {report.properties['normal'].value}, "
        f"dim = {report.dim if report.dim is not None else 'unknown'}"
    )
