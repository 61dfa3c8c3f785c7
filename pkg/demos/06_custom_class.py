r"""
A user-supplied class
=====================

Any surjective morphism into a finite monoid can play the role of the class.
Here eta counts length modulo 2, and we compare it with the built-in classes.
"""

# %%
import json
import tempfile
from pathlib import Path

from tlorbits import ClassSpec, DD, ST, classify, language_from_regex
from tlorbits.monoid import cyclic_group
from tlorbits.syntactic import Morphism

parity = Morphism("ab", cyclic_group(2), {"a": 1, "b": 1})
path = Path(tempfile.mkdtemp()) / "parity.json"
path.write_text(json.dumps(parity.to_json()))
spec = ClassSpec.parse(f"custom:{path}")
print(path.read_text())

# %%
# (aa)* over {a, b} fails for ST and DD but is fine once parity is available.
for text in ["(aa)*", "((a|b)(a|b))*", "(ab)*", "_*a_*"]:
    lang = language_from_regex(text, "ab")
    row = {s.name: classify(lang, s, ["TL"])["TL"].result for s in (ST, DD, spec)}
    print(f"{text:<16}", row)
