/** Toolbar: one blue button per version plus the red evolution-chart button. */
export function renderToolbar(
  container: HTMLElement,
  versionLabels: string[],
  activeIndex: number,
  onVersion: (index: number) => void,
  onChart: () => void,
): void {
  container.textContent = "";
  versionLabels.forEach((label, index) => {
    const button = document.createElement("button");
    button.className = "version-button";
    if (index === activeIndex) button.classList.add("active");
    button.textContent = label;
    button.dataset.versionIndex = String(index);
    button.addEventListener("click", () => onVersion(index));
    container.appendChild(button);
  });

  const chartButton = document.createElement("button");
  chartButton.className = "evolution-button";
  chartButton.textContent = "evolution";
  chartButton.addEventListener("click", onChart);
  container.appendChild(chartButton);
}

/** Replace the whole page with an error message; used for unreadable bundles. */
export function showErrorPanel(root: HTMLElement, message: string): void {
  root.textContent = "";
  const panel = document.createElement("div");
  panel.className = "error-panel";
  const heading = document.createElement("h1");
  heading.textContent = "cannot load bundle";
  const detail = document.createElement("p");
  detail.textContent = message;
  const hint = document.createElement("p");
  hint.textContent = "drop a valid bundle.json anywhere on the page to retry";
  panel.append(heading, detail, hint);
  root.appendChild(panel);
}
