from magmatic.session import Session
from magmatic.evaluator import format_value


def evaluate(text, domain='tag'):
    return Session(domain).evaluator().run(text)

def format(value):
    return format_value(value)
