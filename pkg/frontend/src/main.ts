import { mountExplorer } from "./app";
import "./style.css";

mountExplorer(document.getElementById("app")!, (...args) => fetch(...args));
