// Browser entry point.

import { mountApp } from './app.js'
import { baseUrlFromLocation, createSession } from './session.js'

const root = document.getElementById('app')
if (root) {
  const base = baseUrlFromLocation(window.location.search, '')
  void mountApp(root, createSession(base))
}
