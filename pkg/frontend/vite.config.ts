import { defineConfig } from "vite";

export default defineConfig({
  build: {
    outDir: "dist",
    emptyOutDir: true,
  },
  server: {
    // dev mode talks to a locally running `stanley-solitaire serve`
    proxy: {
      "/api": "http://127.0.0.1:8000",
    },
  },
});
