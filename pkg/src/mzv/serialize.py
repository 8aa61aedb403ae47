"""File formats for relation records.

The native format is JSON lines: one object per record with the fields
``family``, ``weight``, ``source``, ``terms`` (the body as a list of
``{"word", "coeff"}`` pairs in canonical word order, coefficients as exact
numeric strings like ``"-3"`` or ``"5/2"``), and ``zeta``.  The format is
streamable and diff-friendly, so generated relation files can serve as
goldens.

CSV and TeX emitters mirror the two-column source/body table layout used
for eyeballing low-weight output; the TeX form prints words as e-monomials
(``e_ze_1e_0^2``).
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .algebra import NCPoly
from .relations import RelationRecord
from .words import LETTER_CHARS, letters, parse_word, render_word


def _coeff_str(c) -> str:
    return str(c)


def _coeff_parse(s: str):
    f = Fraction(s)
    return int(f) if f.denominator == 1 else f


def body_terms(p: NCPoly) -> list[dict]:
    return [
        {"word": render_word(w), "coeff": _coeff_str(p.terms[w])}
        for w in sorted(p.terms)
    ]


def record_to_json(rec: RelationRecord) -> str:
    return json.dumps(
        {
            "family": rec.family,
            "weight": rec.weight,
            "source": rec.source,
            "terms": body_terms(rec.body),
            "zeta": rec.zeta_form,
        },
        separators=(",", ":"),
    )


def record_from_json(line: str) -> RelationRecord:
    obj = json.loads(line)
    body = NCPoly(
        {parse_word(t["word"]): _coeff_parse(t["coeff"]) for t in obj["terms"]}
    )
    return RelationRecord(
        family=obj["family"],
        weight=obj["weight"],
        source=obj["source"],
        body=body,
        zeta_form=obj["zeta"],
    )


def write_records(fp, records) -> None:
    for rec in records:
        fp.write(record_to_json(rec))
        fp.write("\n")


def read_records(fp) -> list[RelationRecord]:
    return [record_from_json(line) for line in fp if line.strip()]


# ---------------------------------------------------------------------------
# table emitters

def records_to_csv(records) -> str:
    buf = io.StringIO()
    wr = csv.writer(buf, lineterminator="\n")
    wr.writerow(["family", "weight", "source", "body", "zeta"])
    for rec in records:
        wr.writerow([rec.family, rec.weight, rec.source, str(rec.body), rec.zeta_form])
    return buf.getvalue()


def word_to_tex(w: int) -> str:
    ls = letters(w)
    if not ls:
        return "1"
    runs: list[tuple[int, int]] = []
    for a in ls:
        if runs and runs[-1][0] == a:
            runs[-1] = (a, runs[-1][1] + 1)
        else:
            runs.append((a, 1))
    return "".join(
        f"e_{LETTER_CHARS[a]}" + (f"^{n}" if n > 1 else "") for a, n in runs
    )


def poly_to_tex(p: NCPoly) -> str:
    if not p.terms:
        return "0"
    parts = []
    for w in sorted(p.terms):
        c = p.terms[w]
        sign = "-" if c < 0 else ("+" if parts else "")
        mag = -c if c < 0 else c
        mono = word_to_tex(w)
        if mag == 1 and mono != "1":
            parts.append(f"{sign}{mono}")
        elif mono == "1":
            parts.append(f"{sign}{mag}")
        else:
            parts.append(f"{sign}{mag}{mono}")
    return "".join(parts)


def records_to_tex(records) -> str:
    lines = [
        r"\begin{tabular}{|c|c|c|}",
        r"\hline",
        r"weight & $w$ & relation body\\",
        r"\hline",
    ]
    for rec in records:
        src = rec.source
        if "|" in src:
            src_tex = "\\,|\\,".join(word_to_tex(parse_word(s)) for s in src.split("|"))
        else:
            src_tex = word_to_tex(parse_word(src))
        lines.append(f"{rec.weight} & ${src_tex}$ & ${poly_to_tex(rec.body)}$\\\\")
    lines += [r"\hline", r"\end{tabular}", ""]
    return "\n".join(lines)
