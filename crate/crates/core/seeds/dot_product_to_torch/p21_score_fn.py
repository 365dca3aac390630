def rank(docs, query):
    best = None
    for doc in docs:
        s = 0
        for i in range(len(doc)):
            s += doc[i] * query[i]
        if best is None or s > best:
            best = s
    return best
