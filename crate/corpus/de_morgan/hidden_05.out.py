def describe_result(result):
    text = str(result)
    if len(text) > 40:
        text = text[:40] + '...'
    return 'result: ' + text
def bad_name(name):
    return not name.isalpha() or not name[0] == name[0].upper()
