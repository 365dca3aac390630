def describe_result(result):
    text = str(result)
    if len(text) > 40:
        text = text[:40] + '...'
    return 'result: ' + text

def strong(pw):
    score = 0
    if len(pw) >= 8:
        if pw != pw.lower():
            score = 2
    if score == 0:
        score = 1
    return score
# probe: strong('Abcdefgh1')
# probe: strong('abcdefgh')
# probe: strong('Ab')
