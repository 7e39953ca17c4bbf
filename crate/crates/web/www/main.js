import init, { samplePoints, analyze, verifyTheorem } from "./pkg/envelope_lab_web.js";

const $ = (id) => document.getElementById(id);
const num = (id) => Number($(id).value);

function fail(target, e) {
  target.innerHTML = `<p class="err">${e}</p>`;
}

function showAnalysis(r) {
  const rows = r.envelopes
    .map((e) => `<tr class="${e.ggd ? "ggd" : ""}"><td>${e.d}</td><td>${e.dim}</td><td>${e.envelope}</td><td>${e.ggd ? "yes" : ""}</td></tr>`)
    .join("");
  $("analysis").innerHTML = `
    <p>${r.points} points; Hilbert function ${r.hilbert.join(", ")}</p>
    <p>Resolution data <code>${r.resolution}</code> (${r.positive ? "positive" : "not positive"});
       geometric generating degrees {${r.ggds.join(", ")}}</p>
    <table><tr><th>d</th><th>dim I<sub>d</sub></th><th>Z<sub>d</sub></th><th>ggd</th></tr>${rows}</table>`;
}

function showVerdict(r) {
  const expected = r.expected.envelopes.map((e, i) => `Z<sub>${i + 1}</sub>: ${e.kind}${e.degree ? " " + e.degree : ""}`).join(", ");
  const failures = r.failures.length ? `<pre>${JSON.stringify(r.failures, null, 2)}</pre>` : "";
  $("verdict").innerHTML = `
    <p><code>${r.data}</code>: ${r.points} points expected; ${r.passes}/${r.trials} samples pass every check.</p>
    <p>Predicted: ${expected}; ggds {${r.expected.ggds.join(", ")}}</p>${failures}`;
}

await init();

$("sample").onclick = () => {
  try {
    $("points").value = samplePoints(num("prime"), num("n"), num("seed"));
  } catch (e) {
    fail($("analysis"), e);
  }
};

$("analyze").onclick = () => {
  try {
    showAnalysis(JSON.parse(analyze(num("prime"), $("points").value, num("seed"))));
  } catch (e) {
    fail($("analysis"), e);
  }
};

$("verify").onclick = () => {
  try {
    showVerdict(JSON.parse(verifyTheorem(num("prime"), $("data").value, num("trials"), num("seed"))));
  } catch (e) {
    fail($("verdict"), e);
  }
};
