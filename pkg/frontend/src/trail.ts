// Navigation trail: the user's path through the explanatory space.
//
// Every overview opened pushes exactly one entry; back-navigation pops.
// Each user action also bumps a sequence number so that responses
// arriving for superseded actions can be discarded.

export class NavigationTrail {
  private uris: string[] = [];
  private sequence = 0;

  /** Start a new user action; returns its sequence token. */
  begin(): number {
    this.sequence += 1;
    return this.sequence;
  }

  /** True when `token` still belongs to the newest action. */
  isCurrent(token: number): boolean {
    return token === this.sequence;
  }

  push(conceptUri: string): void {
    this.uris.push(conceptUri);
  }

  /** Pop the newest entry; returns the URI to return to, if any. */
  back(): string | null {
    this.uris.pop();
    return this.uris.length ? this.uris[this.uris.length - 1] : null;
  }

  current(): string | null {
    return this.uris.length ? this.uris[this.uris.length - 1] : null;
  }

  get length(): number {
    return this.uris.length;
  }

  entries(): readonly string[] {
    return [...this.uris];
  }

  clear(): void {
    this.uris = [];
  }
}
