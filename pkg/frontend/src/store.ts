/**
 * Local persistence: one event log per profile, stored as the same JSONL
 * text the export button produces. Reloading the page and importing a
 * log from another machine are therefore the same code path.
 */

import { exportLog, importLog, type SessionEvent } from "./events.js";

const PROFILES_KEY = "gentzen.profiles";
const CURRENT_KEY = "gentzen.profile";
const LOG_PREFIX = "gentzen.log.";

export const DEFAULT_PROFILE = "default";

export function listProfiles(storage: Storage): string[] {
  const raw = storage.getItem(PROFILES_KEY);
  if (raw === null) {
    return [];
  }
  try {
    const parsed: unknown = JSON.parse(raw);
    if (
      Array.isArray(parsed) &&
      parsed.every((name) => typeof name === "string")
    ) {
      return parsed as string[];
    }
  } catch {
    // corrupted list: start over rather than refuse to load
  }
  return [];
}

export function currentProfile(storage: Storage): string {
  return storage.getItem(CURRENT_KEY) ?? DEFAULT_PROFILE;
}

function register(storage: Storage, profile: string): void {
  const profiles = listProfiles(storage);
  if (!profiles.includes(profile)) {
    profiles.push(profile);
    storage.setItem(PROFILES_KEY, JSON.stringify(profiles));
  }
  storage.setItem(CURRENT_KEY, profile);
}

export class SessionStore {
  private events: SessionEvent[];

  constructor(
    private readonly storage: Storage,
    readonly profile: string,
  ) {
    register(storage, profile);
    this.events = importLog(storage.getItem(LOG_PREFIX + profile) ?? "");
  }

  /** The full log, oldest first. */
  all(): readonly SessionEvent[] {
    return this.events;
  }

  lastTimestamp(): number {
    const last = this.events[this.events.length - 1];
    return last === undefined ? 0 : last.t;
  }

  append(event: SessionEvent): void {
    this.events.push(event);
    const key = LOG_PREFIX + this.profile;
    const stored = this.storage.getItem(key) ?? "";
    this.storage.setItem(key, stored + exportLog([event]));
  }

  exportText(): string {
    return exportLog(this.events);
  }

  /**
   * Replace this profile's history with an exported log. The text is
   * validated before anything is overwritten, so a bad file leaves the
   * profile untouched.
   */
  importText(text: string): void {
    this.events = importLog(text);
    this.storage.setItem(LOG_PREFIX + this.profile, exportLog(this.events));
  }
}
