import { Api } from "./api.js";
import { App } from "./app.js";

const root = document.getElementById("app");
if (root === null) {
  throw new Error("missing #app container");
}
const app = new App(root, new Api(), window.localStorage);
void app.start();
