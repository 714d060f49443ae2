import app.config
import app.datasets
import app.exceptions
import app.schemas
import app.services
