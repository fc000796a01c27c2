import init, { checkTable, census, doubleWord } from "./pkg/ybx_web.js";

const $ = (id) => document.getElementById(id);

function show(el, fn) {
  try {
    const v = JSON.parse(fn());
    el.textContent = JSON.stringify(v, null, 2);
    return v;
  } catch (e) {
    el.textContent = String(e);
    return null;
  }
}

function check() {
  const v = show($("check-out"), () => checkTable($("table").value));
  const p = $("verdict");
  if (!v) {
    p.textContent = "";
    return;
  }
  const word = (ok) => (ok ? "holds" : "fails");
  p.innerHTML = `YBE <span class="${v.ybe.passed ? "pass" : "fail"}">${word(v.ybe.passed)}</span>, ` +
    `braid equation <span class="${v.braid.passed ? "pass" : "fail"}">${word(v.braid.passed)}</span>`;
}

function runCensus() {
  const out = $("solutions");
  out.textContent = "";
  let v;
  try {
    v = JSON.parse(census(Number($("size").value), $("equation").value === "braid", $("invertible").checked));
  } catch (e) {
    $("census-count").textContent = String(e);
    return;
  }
  $("census-count").textContent = `${v.count} solutions`;
  v.solutions.forEach((s, i) => {
    const b = document.createElement("button");
    b.textContent = `#${i}`;
    b.title = JSON.stringify(s.table);
    b.onclick = () => {
      $("table").value = JSON.stringify(s);
      check();
    };
    out.appendChild(b);
  });
}

function double() {
  show($("double-out"), () => doubleWord($("word").value, Number($("strands").value), Number($("copies").value)));
}

await init();
$("check").onclick = check;
$("run-census").onclick = runCensus;
$("double").onclick = double;
check();
