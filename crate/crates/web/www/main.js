import init, { decompose, family, check_order } from "./pkg/geninv_web.js";

const PRESETS = {
  "2x2 split pair": [
    { field: "Q", rows: [["2", "0"], ["0", "0"]] },
    { field: "Q", rows: [["2", "-6"], ["0", "3"]] },
  ],
  "5x5 rational pair": [
    {
      field: "Q",
      rows: [
        ["9", "0", "1", "2", "-8"],
        ["-32", "1", "-4", "-13", "32"],
        ["2", "0", "0", "1", "-2"],
        ["0", "0", "0", "0", "0"],
        ["9", "0", "1", "2", "-8"],
      ],
    },
    {
      field: "Q",
      rows: [
        ["9", "0", "1", "2", "-8"],
        ["-37", "1", "-4", "-13", "37"],
        ["5", "0", "0", "1", "-5"],
        ["-1", "0", "0", "0", "1"],
        ["9", "0", "1", "2", "-8"],
      ],
    },
  ],
  "5x5 Gaussian matrix": [
    {
      field: "Qi",
      rows: [
        ["19-4i", "-12+3i", "-9+2i", "20-4i", "15-4i"],
        ["12-4i", "-6+3i", "-6+2i", "12-4i", "12-4i"],
        ["186-12i", "-117+9i", "-87+6i", "192-12i", "144-12i"],
        ["45-4i", "-28+3i", "-21+2i", "46-4i", "35-4i"],
        ["38", "-23", "-18", "39", "31"],
      ],
    },
    { field: "Qi", rows: [["0", "0", "0", "0", "0"], ["0", "0", "0", "0", "0"], ["0", "0", "0", "0", "0"], ["0", "0", "0", "0", "0"], ["0", "0", "0", "0", "0"]] },
  ],
};

const $ = (id) => document.getElementById(id);

function compact(doc) {
  const rows = doc.rows.map((r) => "  " + JSON.stringify(r)).join(",\n");
  const head = doc.p ? `"field": "${doc.field}", "p": ${doc.p}` : `"field": "${doc.field}"`;
  return `{${head}, "rows": [\n${rows}\n]}`;
}

function grid(rows) {
  const widths = rows[0].map((_, j) => Math.max(...rows.map((r) => r[j].length)));
  return rows.map((r) => "[" + r.map((c, j) => c.padStart(widths[j])).join("  ") + "]").join("\n");
}

function show(id, f) {
  try {
    $(id).textContent = f();
  } catch (e) {
    $(id).textContent = "error: " + e;
  }
}

function runDecompose() {
  show("decompose-out", () => {
    const d = JSON.parse(decompose($("a").value));
    return [
      `index ${d.index} (matrix convention ${d.matrix_index})`,
      `rank profile ${d.rank_profile.join(", ")}`,
      `r = ${d.r}, chain lengths [${d.chain_lengths.join(", ")}]`,
      "", "C", grid(d.c.rows.length ? d.c.rows : [["(empty)"]]),
      "", "P", grid(d.p.rows),
      "", "J", grid(d.j.rows),
    ].join("\n");
  });
}

function paramValues() {
  const values = {};
  for (const input of $("params").querySelectorAll("input")) {
    values[input.name] = input.value;
  }
  return JSON.stringify(values);
}

function renderFamily(f) {
  return [
    `${f.param_count} free parameters`,
    "", "template in the J basis (* = dependent)", grid(f.template),
    ...(f.dependent.length ? ["", ...f.dependent] : []),
    "", `member (${f.verified ? "verified" : "NOT verified"})`, grid(f.member.rows),
  ].join("\n");
}

function runFamily(rebuild) {
  show("family-out", () => {
    const kind = $("kind").value;
    const f = JSON.parse(family($("a").value, kind, rebuild ? "" : paramValues()));
    if (rebuild) {
      const box = $("params");
      box.replaceChildren();
      for (const name of f.params) {
        const label = document.createElement("label");
        label.textContent = name + " ";
        const input = document.createElement("input");
        input.name = name;
        input.value = "0";
        input.addEventListener("input", () => runFamily(false));
        label.append(input);
        box.append(label);
      }
    }
    return renderFamily(f);
  });
}

function runCheck() {
  show("check-out", () => {
    const r = JSON.parse(check_order($("a").value, $("b").value, $("relation").value));
    const lines = [`A <= B under ${r.relation}: ${r.holds ? "holds" : "does not hold"}`];
    for (const ev of r.evidence) lines.push(`  ${ev.holds ? "ok   " : "fails"} ${ev.check}`);
    if (r.witness) lines.push("", "witness", grid(r.witness.rows));
    return lines.join("\n");
  });
}

function loadPreset(name) {
  const [a, b] = PRESETS[name];
  $("a").value = compact(a);
  $("b").value = compact(b);
  $("params").replaceChildren();
}

await init();
for (const name of Object.keys(PRESETS)) {
  $("preset").append(new Option(name, name));
}
$("preset").addEventListener("change", (e) => loadPreset(e.target.value));
$("run-decompose").addEventListener("click", runDecompose);
$("run-family").addEventListener("click", () => runFamily(true));
$("run-check").addEventListener("click", runCheck);
loadPreset(Object.keys(PRESETS)[0]);
