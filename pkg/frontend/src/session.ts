// Per-browser-session state: who is annotating, against which server.

export interface UiSession {
  annotatorId: string
  baseUrl: string
}

export function createSession(baseUrl = ''): UiSession {
  return { annotatorId: '', baseUrl }
}

export function canSubmit(session: UiSession, label: string): boolean {
  return session.annotatorId.trim().length > 0 && label.trim().length > 0
}

export function baseUrlFromLocation(search: string, origin: string): string {
  // ?api=http://host:port overrides; default is the serving origin
  const params = new URLSearchParams(search)
  const override = params.get('api')
  if (override) return override.replace(/\/$/, '')
  return origin
}
