import {
  AmbientLight,
  DirectionalLight,
  Euler,
  Group,
  PerspectiveCamera,
  Raycaster,
  Scene,
  Vector2,
  WebGLRenderer,
} from "three";
import { applyAction, CameraState, initialCamera } from "./camera.js";
import { renderChart } from "./chart.js";
import { actionForKey, actionForWheel } from "./input.js";
import { panelContent, renderPanel } from "./panel.js";
import { buildCityGroup, pickInfoFor } from "./scene.js";
import {
  createState,
  fragmentForVersion,
  select,
  setChartOpen,
  switchVersion,
  versionFromFragment,
  ViewerState,
} from "./state.js";
import { Bundle } from "./types.js";
import { renderToolbar, showErrorPanel } from "./ui.js";
import { validateBundle } from "./validate.js";

class ViewerApp {
  private state: ViewerState;
  private scene = new Scene();
  private cityGroup: Group;
  private camera = new PerspectiveCamera(60, innerWidth / innerHeight, 0.1, 4000);
  private renderer: WebGLRenderer;
  private raycaster = new Raycaster();

  constructor(
    private bundle: Bundle,
    private canvas: HTMLCanvasElement,
    private toolbar: HTMLElement,
    private panel: HTMLElement,
    private chartOverlay: HTMLElement,
  ) {
    const startIndex = versionFromFragment(location.hash, bundle.snapshots.length);
    const city = bundle.snapshots[startIndex]!.city;
    this.state = createState(initialCamera(city.groundWidth, city.groundDepth), startIndex);

    this.renderer = new WebGLRenderer({ canvas, antialias: true });
    this.scene.add(new AmbientLight(0xffffff, 0.7));
    const sun = new DirectionalLight(0xffffff, 1.4);
    sun.position.set(1, 2, 1.5);
    this.scene.add(sun);

    this.cityGroup = buildCityGroup(city);
    this.scene.add(this.cityGroup);

    this.bindEvents();
    this.refreshToolbar();
    this.resize();
    this.renderer.setAnimationLoop(() => this.frame());
  }

  private bindEvents(): void {
    window.addEventListener("resize", () => this.resize());
    window.addEventListener("keydown", (event) => {
      const action = actionForKey(event.code);
      if (!action) return;
      event.preventDefault();
      this.state = { ...this.state, camera: applyAction(this.state.camera, action) };
    });
    this.canvas.addEventListener("wheel", (event) => {
      const action = actionForWheel(event.deltaY);
      if (!action) return;
      event.preventDefault();
      this.state = { ...this.state, camera: applyAction(this.state.camera, action) };
    });
    this.canvas.addEventListener("click", (event) => this.pick(event));
    window.addEventListener("hashchange", () => {
      const index = versionFromFragment(location.hash, this.bundle.snapshots.length);
      if (index !== this.state.activeVersionIndex) this.activateVersion(index);
    });
  }

  private resize(): void {
    this.renderer.setPixelRatio(devicePixelRatio);
    this.renderer.setSize(innerWidth, innerHeight);
    this.camera.aspect = innerWidth / innerHeight;
    this.camera.updateProjectionMatrix();
  }

  private frame(): void {
    const cam: CameraState = this.state.camera;
    this.camera.position.set(cam.x, cam.y, cam.z);
    this.camera.setRotationFromEuler(new Euler(cam.pitch, -cam.yaw, 0, "YXZ"));
    this.renderer.render(this.scene, this.camera);
  }

  private pick(event: MouseEvent): void {
    const ndc = new Vector2(
      (event.clientX / innerWidth) * 2 - 1,
      -(event.clientY / innerHeight) * 2 + 1,
    );
    this.raycaster.setFromCamera(ndc, this.camera);
    const hits = this.raycaster.intersectObjects(this.cityGroup.children, true);
    const info = hits.length > 0 ? pickInfoFor(hits[0]!.object) : null;
    // Clicking the ground or empty sky clears the selection.
    const selection = info && info.kind !== "ground" ? info : null;
    this.state = select(this.state, selection);
    this.refreshPanel();
  }

  private activateVersion(index: number): void {
    this.state = switchVersion(this.state, index, this.bundle.snapshots.length);
    history.replaceState(null, "", fragmentForVersion(index));
    this.scene.remove(this.cityGroup);
    this.cityGroup = buildCityGroup(this.bundle.snapshots[index]!.city);
    this.scene.add(this.cityGroup);
    this.refreshToolbar();
    this.refreshPanel();
  }

  private refreshToolbar(): void {
    renderToolbar(
      this.toolbar,
      this.bundle.snapshots.map((snap) => snap.versionLabel),
      this.state.activeVersionIndex,
      (index) => this.activateVersion(index),
      () => this.toggleChart(),
    );
  }

  private refreshPanel(): void {
    const snapshot = this.bundle.snapshots[this.state.activeVersionIndex]!;
    renderPanel(
      this.panel,
      this.state.selection ? panelContent(this.state.selection, snapshot) : null,
    );
  }

  private toggleChart(): void {
    this.state = setChartOpen(this.state, !this.state.chartOpen);
    if (this.state.chartOpen) {
      this.chartOverlay.classList.remove("hidden");
      renderChart(this.chartOverlay, this.bundle.evolution);
    } else {
      this.chartOverlay.classList.add("hidden");
    }
  }

  dispose(): void {
    this.renderer.setAnimationLoop(null);
    this.renderer.dispose();
  }
}

let app: ViewerApp | null = null;

function boot(rawDocument: unknown): void {
  const bundle = validateBundle(rawDocument);
  app?.dispose();
  app = new ViewerApp(
    bundle,
    document.getElementById("view") as HTMLCanvasElement,
    document.getElementById("toolbar") as HTMLElement,
    document.getElementById("panel") as HTMLElement,
    document.getElementById("chart") as HTMLElement,
  );
}

function fail(message: string): void {
  app?.dispose();
  app = null;
  showErrorPanel(document.body, message);
}

async function loadFromServer(): Promise<void> {
  try {
    const response = await fetch("/bundle.json");
    if (!response.ok) throw new Error(`GET /bundle.json: ${response.status}`);
    boot(await response.json());
  } catch (error) {
    fail(error instanceof Error ? error.message : String(error));
  }
}

// Dropping a bundle file anywhere on the page loads it in place of the served one.
window.addEventListener("dragover", (event) => event.preventDefault());
window.addEventListener("drop", (event) => {
  event.preventDefault();
  const file = event.dataTransfer?.files[0];
  if (!file) return;
  file
    .text()
    .then((text) => boot(JSON.parse(text)))
    .catch((error) => fail(error instanceof Error ? error.message : String(error)));
});

loadFromServer();
