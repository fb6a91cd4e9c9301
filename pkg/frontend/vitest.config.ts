import { defineConfig } from 'vitest/config';

// The page origin matches the default integration service URL, so live
// tests run same-origin; the service also sends permissive CORS headers
// for deployments where the UI is hosted elsewhere.
export default defineConfig({
  test: {
    environment: 'happy-dom',
    environmentOptions: {
      happyDOM: {
        url: process.env.ESPACE_SERVICE_URL ?? 'http://127.0.0.1:8731',
      },
    },
    include: ['test/**/*.test.ts'],
  },
});
