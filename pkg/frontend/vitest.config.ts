import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    include: ["tests/**/*.test.ts"],
    // the e2e file boots the real Python service, give it room
    testTimeout: 30_000,
    hookTimeout: 30_000,
  },
});
