class Broken {
    /* this comment never ends
