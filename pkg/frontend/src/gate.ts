/**
 * Monotonic ticket counter for panel fetches. Each fetch takes a ticket;
 * only the holder of the newest ticket may apply its response, so a slow
 * reply for an older selection can never overwrite a newer one.
 */
export function createRequestGate() {
  let latest = 0;
  return {
    issue(): number {
      latest += 1;
      return latest;
    },
    isCurrent(ticket: number): boolean {
      return ticket === latest;
    },
  };
}

export type RequestGate = ReturnType<typeof createRequestGate>;
