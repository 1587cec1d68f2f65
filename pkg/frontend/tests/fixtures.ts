// Server responses captured verbatim from the live service (a
// nine-vertex braced grid mid-game position with one unmarkable edge,
// and a finished triangle game won by a completed cycle).  The unit
// tests project these without touching the network.

import type { GameView, MoveResponse } from "../src/types.js";

export const TAXONOMY_STATE: GameView = {
  "id": "fixture-taxonomy",
  "board_id": "grid9",
  "board": {
    "vertices": [
      {
        "id": 0,
        "x": -1.0,
        "y": 1.0
      },
      {
        "id": 1,
        "x": 0.0,
        "y": 1.0
      },
      {
        "id": 2,
        "x": 1.0,
        "y": 1.0
      },
      {
        "id": 3,
        "x": -1.0,
        "y": 0.0
      },
      {
        "id": 4,
        "x": 0.0,
        "y": 0.0
      },
      {
        "id": 5,
        "x": 1.0,
        "y": 0.0
      },
      {
        "id": 6,
        "x": -1.0,
        "y": -1.0
      },
      {
        "id": 7,
        "x": 0.0,
        "y": -1.0
      },
      {
        "id": 8,
        "x": 1.0,
        "y": -1.0
      }
    ],
    "edges": [
      {
        "id": 0,
        "u": 0,
        "v": 1
      },
      {
        "id": 1,
        "u": 0,
        "v": 3
      },
      {
        "id": 2,
        "u": 1,
        "v": 2
      },
      {
        "id": 3,
        "u": 1,
        "v": 4
      },
      {
        "id": 4,
        "u": 2,
        "v": 4
      },
      {
        "id": 5,
        "u": 2,
        "v": 5
      },
      {
        "id": 6,
        "u": 3,
        "v": 4
      },
      {
        "id": 7,
        "u": 3,
        "v": 6
      },
      {
        "id": 8,
        "u": 4,
        "v": 5
      },
      {
        "id": 9,
        "u": 4,
        "v": 6
      },
      {
        "id": 10,
        "u": 4,
        "v": 7
      },
      {
        "id": 11,
        "u": 5,
        "v": 8
      },
      {
        "id": 12,
        "u": 6,
        "v": 7
      },
      {
        "id": 13,
        "u": 7,
        "v": 8
      }
    ]
  },
  "cells": [
    {
      "id": 0,
      "vertices": [
        0,
        3,
        4,
        1
      ],
      "edges": [
        1,
        6,
        3,
        0
      ]
    },
    {
      "id": 1,
      "vertices": [
        1,
        4,
        2
      ],
      "edges": [
        3,
        4,
        2
      ]
    },
    {
      "id": 2,
      "vertices": [
        2,
        4,
        5
      ],
      "edges": [
        4,
        8,
        5
      ]
    },
    {
      "id": 3,
      "vertices": [
        3,
        6,
        4
      ],
      "edges": [
        7,
        9,
        6
      ]
    },
    {
      "id": 4,
      "vertices": [
        4,
        7,
        8,
        5
      ],
      "edges": [
        10,
        13,
        11,
        8
      ]
    },
    {
      "id": 5,
      "vertices": [
        4,
        6,
        7
      ],
      "edges": [
        9,
        12,
        10
      ]
    }
  ],
  "engine_player": 0,
  "policy": null,
  "to_move": 2,
  "winner": null,
  "cycle_cells": [],
  "markings": [
    {
      "tail": 0,
      "head": 1
    },
    {
      "tail": 3,
      "head": 0
    },
    {
      "tail": 1,
      "head": 2
    },
    null,
    {
      "tail": 4,
      "head": 2
    },
    null,
    null,
    {
      "tail": 6,
      "head": 3
    },
    {
      "tail": 4,
      "head": 5
    },
    null,
    null,
    {
      "tail": 8,
      "head": 5
    },
    null,
    null
  ],
  "moves": [
    {
      "edge": 0,
      "tail": 0,
      "head": 1,
      "player": 1
    },
    {
      "edge": 1,
      "tail": 3,
      "head": 0,
      "player": 2
    },
    {
      "edge": 2,
      "tail": 1,
      "head": 2,
      "player": 1
    },
    {
      "edge": 4,
      "tail": 4,
      "head": 2,
      "player": 2
    },
    {
      "edge": 7,
      "tail": 6,
      "head": 3,
      "player": 1
    },
    {
      "edge": 8,
      "tail": 4,
      "head": 5,
      "player": 2
    },
    {
      "edge": 11,
      "tail": 8,
      "head": 5,
      "player": 1
    }
  ],
  "legal_moves": [
    {
      "edge": 3,
      "tail": 1,
      "head": 4,
      "death": true
    },
    {
      "edge": 3,
      "tail": 4,
      "head": 1,
      "death": false
    },
    {
      "edge": 6,
      "tail": 3,
      "head": 4,
      "death": true
    },
    {
      "edge": 6,
      "tail": 4,
      "head": 3,
      "death": true
    },
    {
      "edge": 9,
      "tail": 4,
      "head": 6,
      "death": true
    },
    {
      "edge": 9,
      "tail": 6,
      "head": 4,
      "death": false
    },
    {
      "edge": 10,
      "tail": 4,
      "head": 7,
      "death": false
    },
    {
      "edge": 10,
      "tail": 7,
      "head": 4,
      "death": false
    },
    {
      "edge": 12,
      "tail": 6,
      "head": 7,
      "death": false
    },
    {
      "edge": 12,
      "tail": 7,
      "head": 6,
      "death": false
    },
    {
      "edge": 13,
      "tail": 7,
      "head": 8,
      "death": false
    }
  ],
  "edges": [
    {
      "edge": 0,
      "status": "marked",
      "directions": [],
      "death_directions": [],
      "currently_unplayable": false
    },
    {
      "edge": 1,
      "status": "marked",
      "directions": [],
      "death_directions": [],
      "currently_unplayable": false
    },
    {
      "edge": 2,
      "status": "marked",
      "directions": [],
      "death_directions": [],
      "currently_unplayable": false
    },
    {
      "edge": 3,
      "status": "markable",
      "directions": [
        [
          1,
          4
        ],
        [
          4,
          1
        ]
      ],
      "death_directions": [
        [
          1,
          4
        ]
      ],
      "currently_unplayable": false
    },
    {
      "edge": 4,
      "status": "marked",
      "directions": [],
      "death_directions": [],
      "currently_unplayable": false
    },
    {
      "edge": 5,
      "status": "unmarkable",
      "directions": [],
      "death_directions": [],
      "currently_unplayable": false
    },
    {
      "edge": 6,
      "status": "markable",
      "directions": [
        [
          3,
          4
        ],
        [
          4,
          3
        ]
      ],
      "death_directions": [
        [
          3,
          4
        ],
        [
          4,
          3
        ]
      ],
      "currently_unplayable": true
    },
    {
      "edge": 7,
      "status": "marked",
      "directions": [],
      "death_directions": [],
      "currently_unplayable": false
    },
    {
      "edge": 8,
      "status": "marked",
      "directions": [],
      "death_directions": [],
      "currently_unplayable": false
    },
    {
      "edge": 9,
      "status": "markable",
      "directions": [
        [
          4,
          6
        ],
        [
          6,
          4
        ]
      ],
      "death_directions": [
        [
          4,
          6
        ]
      ],
      "currently_unplayable": false
    },
    {
      "edge": 10,
      "status": "markable",
      "directions": [
        [
          4,
          7
        ],
        [
          7,
          4
        ]
      ],
      "death_directions": [],
      "currently_unplayable": false
    },
    {
      "edge": 11,
      "status": "marked",
      "directions": [],
      "death_directions": [],
      "currently_unplayable": false
    },
    {
      "edge": 12,
      "status": "markable",
      "directions": [
        [
          6,
          7
        ],
        [
          7,
          6
        ]
      ],
      "death_directions": [],
      "currently_unplayable": false
    },
    {
      "edge": 13,
      "status": "markable",
      "directions": [
        [
          7,
          8
        ]
      ],
      "death_directions": [],
      "currently_unplayable": false
    }
  ],
  "vertices": [
    {
      "vertex": 0,
      "status": "saturated"
    },
    {
      "vertex": 1,
      "status": "neutral"
    },
    {
      "vertex": 2,
      "status": "almost-sink"
    },
    {
      "vertex": 3,
      "status": "neutral"
    },
    {
      "vertex": 4,
      "status": "neutral"
    },
    {
      "vertex": 5,
      "status": "almost-sink"
    },
    {
      "vertex": 6,
      "status": "neutral"
    },
    {
      "vertex": 7,
      "status": "neutral"
    },
    {
      "vertex": 8,
      "status": "almost-source"
    }
  ],
  "unmarkable": [
    5
  ]
};

export const WON_STATE: MoveResponse = {
  "id": "fixture-won",
  "board_id": "cycle-3",
  "board": {
    "vertices": [
      {
        "id": 0,
        "x": 6.123233995736766e-17,
        "y": 1.0
      },
      {
        "id": 1,
        "x": -0.8660254037844388,
        "y": -0.4999999999999997
      },
      {
        "id": 2,
        "x": 0.8660254037844384,
        "y": -0.5000000000000004
      }
    ],
    "edges": [
      {
        "id": 0,
        "u": 0,
        "v": 1
      },
      {
        "id": 1,
        "u": 1,
        "v": 2
      },
      {
        "id": 2,
        "u": 2,
        "v": 0
      }
    ]
  },
  "cells": [
    {
      "id": 0,
      "vertices": [
        0,
        1,
        2
      ],
      "edges": [
        0,
        1,
        2
      ]
    }
  ],
  "engine_player": 0,
  "policy": null,
  "to_move": 2,
  "winner": 1,
  "cycle_cells": [
    {
      "cell": 0,
      "direction": "ccw"
    }
  ],
  "markings": [
    {
      "tail": 0,
      "head": 1
    },
    {
      "tail": 1,
      "head": 2
    },
    {
      "tail": 2,
      "head": 0
    }
  ],
  "moves": [
    {
      "edge": 0,
      "tail": 0,
      "head": 1,
      "player": 1
    },
    {
      "edge": 1,
      "tail": 1,
      "head": 2,
      "player": 2
    },
    {
      "edge": 2,
      "tail": 2,
      "head": 0,
      "player": 1
    }
  ],
  "legal_moves": [],
  "edges": [
    {
      "edge": 0,
      "status": "marked",
      "directions": [],
      "death_directions": [],
      "currently_unplayable": false
    },
    {
      "edge": 1,
      "status": "marked",
      "directions": [],
      "death_directions": [],
      "currently_unplayable": false
    },
    {
      "edge": 2,
      "status": "marked",
      "directions": [],
      "death_directions": [],
      "currently_unplayable": false
    }
  ],
  "vertices": [
    {
      "vertex": 0,
      "status": "saturated"
    },
    {
      "vertex": 1,
      "status": "saturated"
    },
    {
      "vertex": 2,
      "status": "saturated"
    }
  ],
  "unmarkable": [],
  "human_move": {
    "edge": 2,
    "tail": 2,
    "head": 0
  },
  "engine_move": null
};
