/** Browser entry point: mount the app on the page shell. */

import { startApp } from './main.js';

const root = document.getElementById('app');
if (root) startApp(root, '');
