#!/usr/bin/env python3
"""Regenerates include/specloss/table_data.hpp from the files in data/."""
import pathlib

ROOT = pathlib.Path(__file__).resolve().parent.parent
FILES = [
    ("mackinnon_tau_critical.txt", "kTauCriticalTable"),
    ("mackinnon_tau_pvalue.txt", "kTauPvalueTable"),
    ("davidson_mackinnon_coint.txt", "kCointCriticalTable"),
]

out = ["#pragma once", "",
       "// Generated from data/*.txt by tools/embed_tables.py; keep byte-identical.", "",
       "#include <string_view>", "", "namespace specloss::tables {", ""]
for fname, name in FILES:
    text = (ROOT / "data" / fname).read_text()
    out.append(f'inline constexpr std::string_view {name} = R"TABLE({text})TABLE";')
    out.append("")
out.append("}  // namespace specloss::tables")
(ROOT / "include" / "specloss" / "table_data.hpp").write_text("\n".join(out) + "\n")
